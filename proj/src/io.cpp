#include "rtorsion/io.hpp"

#include <fstream>
#include <limits>

namespace rtorsion {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("json: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::int64_t as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) bad(what + " must be an integer");
  return j.get<std::int64_t>();
}

double as_double(const Json& j, const std::string& what) {
  if (!j.is_number()) bad(what + " must be a number");
  return j.get<double>();
}

Json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
      bad("'" + j.get<std::string>() + "' is not an integer");
    }
  }
  bad("integer entry expected, got " + j.dump());
}

Complex complex_from(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  bad("complex entry must be a number or a [re, im] pair, got " + j.dump());
}

Json ring_json(ScalarDomain domain, std::int64_t modulus) {
  switch (domain) {
    case ScalarDomain::GroupRing:
      return modulus == 0 ? Json{{"type", "laurent"}} : Json{{"type", "cyclic"}, {"p", modulus}};
    case ScalarDomain::Integer:
      return Json{{"type", "integer"}};
    case ScalarDomain::Complex:
      return Json{{"type", "complex"}};
  }
  return {};
}

template <class S, class Entry>
Json complex_json(const BasedChainComplex<S>& c, Entry entry) {
  Json boundaries = Json::array();
  for (int k = 1; k <= c.top_degree(); ++k) {
    const auto& d = c.boundary(k);
    Json rows = Json::array();
    for (std::size_t i = 0; i < row_count(d); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < col_count(d); ++j)
        row.push_back(entry(d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))));
      rows.push_back(std::move(row));
    }
    boundaries.push_back(std::move(rows));
  }
  Json out{{"ring", ring_json(BasedChainComplex<S>::domain(), c.modulus())},
           {"ranks", c.ranks()},
           {"boundaries", std::move(boundaries)}};
  if (!c.labels().empty()) out["labels"] = c.labels();
  return out;
}

// Reads d_1..d_n with shapes checked against the ranks.
template <class S, class Entry>
BasedChainComplex<S> parse_complex(const Json& j, std::int64_t modulus, Entry entry) {
  const Json& ranks_json = field(j, "ranks");
  if (!ranks_json.is_array() || ranks_json.empty()) bad("'ranks' must be a nonempty array");
  std::vector<std::size_t> ranks;
  for (const Json& r : ranks_json) {
    const std::int64_t v = as_int(r, "rank");
    if (v < 0) bad("ranks must be nonnegative");
    ranks.push_back(static_cast<std::size_t>(v));
  }
  const Json& bj = field(j, "boundaries");
  if (!bj.is_array()) bad("'boundaries' must be an array");
  if (bj.size() + 1 != ranks.size())
    bad("expected " + std::to_string(ranks.size() - 1) + " boundary matrices, got " + std::to_string(bj.size()));
  std::vector<MatrixOf<S>> boundaries;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    const Json& rows = bj[k - 1];
    const std::size_t nr = ranks[k - 1], nc = ranks[k];
    const std::string where = "boundary " + std::to_string(k);
    if (!rows.is_array() || rows.size() != nr) bad(where + " must have " + std::to_string(nr) + " rows");
    MatrixOf<S> d = ScalarTraits<S>::zeros(nr, nc, modulus);
    for (std::size_t i = 0; i < nr; ++i) {
      if (!rows[i].is_array() || rows[i].size() != nc)
        bad(where + " row " + std::to_string(i) + " must have " + std::to_string(nc) + " entries");
      for (std::size_t c = 0; c < nc; ++c)
        d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = entry(rows[i][c]);
    }
    boundaries.push_back(std::move(d));
  }
  BasedChainComplex<S> out(std::move(ranks), std::move(boundaries), modulus);
  if (j.contains("labels")) out.set_labels(j.at("labels").get<std::vector<std::vector<std::string>>>());
  return out;
}

}  // namespace

Json to_json(const GroupRingElement& x) {
  Json out = Json::array();
  for (const auto& [e, c] : x.terms()) out.push_back(Json::array({c, e}));
  return out;
}

GroupRingElement group_ring_from_json(const Json& j, std::int64_t modulus) {
  if (j.is_number_integer()) return GroupRingElement::integer(modulus, j.get<std::int64_t>());
  if (!j.is_array()) bad("group ring entry must be a list of [coefficient, exponent] pairs, got " + j.dump());
  std::vector<std::pair<GroupRingElement::Coefficient, GroupRingElement::Exponent>> terms;
  for (const Json& t : j) {
    if (!t.is_array() || t.size() != 2) bad("group ring term must be [coefficient, exponent], got " + t.dump());
    terms.emplace_back(as_int(t[0], "coefficient"), as_int(t[1], "exponent"));
  }
  return GroupRingElement(modulus, std::move(terms));
}

Json to_json(const Representation& rep) {
  switch (rep.kind()) {
    case Representation::Kind::RootOfUnity:
      return {{"kind", "root_of_unity"}, {"p", rep.order()}, {"k", rep.index()}};
    case Representation::Kind::Angle:
      return {{"kind", "angle"}, {"psi", rep.psi()}};
    case Representation::Kind::ComplexEval:
      return {{"kind", "complex"}, {"re", rep.value().real()}, {"im", rep.value().imag()}};
  }
  return {};
}

Representation representation_from_json(const Json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "root_of_unity") return Representation::root_of_unity(as_int(field(j, "p"), "p"), as_int(field(j, "k"), "k"));
  if (kind == "angle") return Representation::angle(as_double(field(j, "psi"), "psi"));
  if (kind == "complex")
    return Representation::complex_value({as_double(field(j, "re"), "re"), as_double(field(j, "im"), "im")});
  bad("unknown representation kind '" + kind + "'");
}

Json to_json(const GroupRingComplex& c) {
  return complex_json(c, [](const GroupRingElement& x) { return to_json(x); });
}

Json to_json(const IntegerComplex& c) {
  return complex_json(c, [](const Integer& x) { return integer_json(x); });
}

Json to_json(const ComplexChainComplex& c) {
  return complex_json(c, [](const Complex& x) { return Json::array({x.real(), x.imag()}); });
}

Json to_json(const AnyComplex& c) {
  return std::visit([](const auto& x) { return to_json(x); }, c);
}

AnyComplex complex_from_json(const Json& j) {
  const Json& ring = field(j, "ring");
  const std::string type = field(ring, "type").get<std::string>();
  if (type == "cyclic") {
    const std::int64_t p = as_int(field(ring, "p"), "ring p");
    if (p < 1) bad("cyclic group order must be >= 1");
    return parse_complex<GroupRingElement>(j, p, [p](const Json& e) { return group_ring_from_json(e, p); });
  }
  if (type == "laurent")
    return parse_complex<GroupRingElement>(j, 0, [](const Json& e) { return group_ring_from_json(e, 0); });
  if (type == "integer") return parse_complex<Integer>(j, 0, integer_from_json);
  if (type == "complex") return parse_complex<Complex>(j, 0, complex_from);
  bad("unknown ring type '" + type + "'");
}

Json to_json(const Ambiguity& a) {
  Json out{{"kind", a.name()}};
  if (a.kind == Ambiguity::Kind::ModSignAndPowers) {
    out["p"] = a.p;
    out["eta"] = {{"re", a.eta.real()}, {"im", a.eta.imag()}};
  }
  return out;
}

Json to_json(const TorsionClass& t, const std::string& method) {
  const Complex v = t.canonical();
  return {{"value", {{"re", v.real()}, {"im", v.imag()}}},
          {"ambiguity", to_json(t.ambiguity())},
          {"modulus_squared", t.modulus_squared()},
          {"method", method}};
}

Json real_torsion_json(double value, const std::string& method) {
  return {{"value", {{"re", value}, {"im", 0.0}}},
          {"ambiguity", to_json(Ambiguity::none())},
          {"modulus_squared", value * value},
          {"method", method}};
}

Json to_json(const LensSpace& lens) { return {{"p", lens.p()}, {"q", lens.q()}}; }

LensSpace lens_from_json(const Json& j) {
  const Json& q = field(j, "q");
  if (!q.is_array()) bad("'q' must be an array");
  std::vector<std::int64_t> qs;
  for (const Json& x : q) qs.push_back(as_int(x, "q"));
  return LensSpace(as_int(field(j, "p"), "p"), std::move(qs));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

}  // namespace rtorsion
