#include "rquant/io.hpp"

#include <fstream>

#include "rquant/errors.hpp"

namespace rquant::io {

namespace {

const json& member(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string(what) + ": missing field '" + key + "'");
  }
  return j.at(key);
}

json rat_matrix_to_json(const RatMatrix& m) { return m.to_strings(); }

json series_to_json(const HSeries& s, const VarList& coords) {
  json arr = json::array();
  for (const auto& c : s.coeffs()) arr.push_back(poly_to_json(c, coords));
  return arr;
}

}  // namespace

json poly_to_json(const MPoly& p, const VarList& coords) {
  const MPoly a = p.aligned(coords);
  json arr = json::array();
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    arr.push_back({{"coeff", format_rat(it->second)}, {"exps", it->first}});
  }
  return arr;
}

MPoly poly_from_json(const json& j, const VarList& coords) {
  if (!j.is_array()) throw ParseError("polynomial literal must be an array of terms");
  MPoly::Terms terms;
  for (const auto& t : j) {
    const auto& c = member(t, "coeff", "polynomial term");
    const auto& e = member(t, "exps", "polynomial term");
    if (!c.is_string()) throw ParseError("term coefficient must be a \"num/den\" string");
    if (!e.is_array() || e.size() != coords.size()) {
      throw ParseError("term exponent vector must have " + std::to_string(coords.size()) + " entries");
    }
    Exponents exps;
    for (const auto& k : e) {
      if (!k.is_number_integer() || k.get<long long>() < 0) {
        throw ParseError("exponents must be nonnegative integers");
      }
      exps.push_back(static_cast<std::uint32_t>(k.get<long long>()));
    }
    terms[exps] += parse_rat(c.get<std::string>());
  }
  return MPoly(coords, std::move(terms));
}

json space_to_json(const Space& s) {
  return {{"base", s.base()}, {"slots", s.slots()}, {"coords", s.coords()}};
}

Space space_from_json(const json& j) {
  const auto& base = member(j, "base", "space");
  if (!base.is_array() || base.empty()) throw ParseError("space.base must be a nonempty array of names");
  std::vector<std::string> names;
  for (const auto& b : base) {
    if (!b.is_string()) throw ParseError("space.base entries must be strings");
    names.push_back(b.get<std::string>());
  }
  const int slots = j.contains("slots") ? j.at("slots").get<int>() : 1;
  Space s = [&] {
    try {
      return Space(names, slots);
    } catch (const DomainError& e) {
      throw ParseError(std::string("invalid space: ") + e.what());
    }
  }();
  if (j.contains("coords") && j.at("coords").get<std::vector<std::string>>() != s.coords()) {
    throw ParseError("space.coords does not match base/slots naming");
  }
  return s;
}

json field_to_json(const PolyVectorField& v) {
  json comps = json::object();
  for (std::size_t i = 0; i < v.space().dim(); ++i) {
    comps[v.space().coords()[i]] = poly_to_json(v.component(i), v.space().coords());
  }
  return {{"space", space_to_json(v.space())}, {"components", comps}};
}

PolyVectorField field_from_json(const json& j) {
  const Space s = space_from_json(member(j, "space", "vector field"));
  const auto& comps = member(j, "components", "vector field");
  if (!comps.is_object()) throw ParseError("vector field components must be an object");
  for (const auto& [k, v] : comps.items()) {
    if (s.index_of(k) == s.dim()) throw ParseError("component for unknown coordinate '" + k + "'");
  }
  std::vector<MPoly> out;
  for (const auto& c : s.coords()) {
    out.push_back(comps.contains(c) ? poly_from_json(comps.at(c), s.coords()) : MPoly());
  }
  return PolyVectorField(s, std::move(out));
}

json diffeo_to_json(const FormalDiffeo& R) {
  json imgs = json::object();
  for (std::size_t i = 0; i < R.space().dim(); ++i) {
    imgs[R.space().coords()[i]] = series_to_json(R.image(i), R.space().coords());
  }
  return {{"space", space_to_json(R.space())}, {"order", R.order()}, {"images", imgs}};
}

FormalDiffeo diffeo_from_json(const json& j) {
  const Space s = space_from_json(member(j, "space", "formal diffeomorphism"));
  const auto& ord = member(j, "order", "formal diffeomorphism");
  if (!ord.is_number_integer() || ord.get<int>() < 0) throw ParseError("order must be a nonnegative integer");
  const int n = ord.get<int>();
  const auto& imgs = member(j, "images", "formal diffeomorphism");
  std::vector<HSeries> out;
  for (const auto& c : s.coords()) {
    if (!imgs.contains(c)) throw ParseError("missing image for coordinate '" + c + "'");
    const auto& arr = imgs.at(c);
    if (!arr.is_array() || arr.size() != static_cast<std::size_t>(n + 1)) {
      throw ParseError("image of '" + c + "' must list " + std::to_string(n + 1) + " coefficients");
    }
    std::vector<MPoly> coeffs;
    for (const auto& p : arr) coeffs.push_back(poly_from_json(p, s.coords()));
    out.emplace_back(n, std::move(coeffs));
  }
  try {
    return FormalDiffeo(s, n, std::move(out));
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid formal diffeomorphism: ") + e.what());
  }
}

json algebra_to_json(const AlgebraSpec& A) {
  json mult = json::array();
  for (const auto& plane : A.mult()) {
    json p = json::array();
    for (const auto& row : plane) {
      json r = json::array();
      for (const auto& q : row) r.push_back(format_rat(q));
      p.push_back(r);
    }
    mult.push_back(p);
  }
  json c = json::array();
  for (const auto& q : A.c()) c.push_back(format_rat(q));
  return {{"coords", A.coords()}, {"mult", mult}, {"c", c}};
}

AlgebraSpec algebra_from_json(const json& j) {
  const auto coords = member(j, "coords", "algebra").get<std::vector<std::string>>();
  std::vector<std::vector<std::vector<Rat>>> mult;
  for (const auto& plane : member(j, "mult", "algebra")) {
    auto& p = mult.emplace_back();
    for (const auto& row : plane) {
      auto& r = p.emplace_back();
      for (const auto& q : row) r.push_back(parse_rat(q.get<std::string>()));
    }
  }
  std::vector<Rat> c;
  for (const auto& q : member(j, "c", "algebra")) c.push_back(parse_rat(q.get<std::string>()));
  try {
    return AlgebraSpec(coords, std::move(mult), std::move(c));
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid algebra: ") + e.what());
  }
}

json classical_residual_to_json(const ClassicalResidual& res) {
  return {{"passes", res.passes()},
          {"cybe_zero", res.cybe.is_zero()},
          {"unitarity_zero", res.unitarity.is_zero()},
          {"cybe", field_to_json(res.cybe)},
          {"unitarity", field_to_json(res.unitarity)},
          {"cybe_text", res.cybe.to_string()},
          {"unitarity_text", res.unitarity.to_string()}};
}

json quantum_residual_to_json(const QuantumResidual& res, const Space& space) {
  auto part = [](const std::map<std::string, HSeries>& m, const Space& s) {
    json out = json::object();
    for (const auto& [coord, series] : m) {
      out[coord] = {{"zero", series.is_zero()},
                    {"series", series_to_json(series, s.coords())},
                    {"text", series.to_string()}};
    }
    return out;
  };
  return {{"passes", res.passes()},
          {"qybe_zero", res.qybe_passes()},
          {"unitarity_zero", res.unitarity_passes()},
          {"qybe", part(res.qybe, space.power(3))},
          {"unitarity", part(res.unitarity, space)}};
}

json lie_report_to_json(const LieCocycleData& data) {
  json gplus = json::array();
  for (const auto& a : data.gplus_basis()) gplus.push_back({{"field", field_to_json(a)}, {"text", a.to_string()}});
  json vb = json::array();
  for (const auto& w : data.v_basis) {
    vb.push_back({{"poly", poly_to_json(w, data.base.coords())}, {"text", w.to_string()}});
  }
  json structure = json::array();
  for (const auto& plane : data.structure()) {
    json p = json::array();
    for (const auto& row : plane) {
      json r = json::array();
      for (const auto& q : row) r.push_back(format_rat(q));
      p.push_back(r);
    }
    structure.push_back(p);
  }
  json actions = json::array();
  for (const auto& m : data.action_on_vdual) actions.push_back(rat_matrix_to_json(m));
  const auto lemma = verify_lemma1(data);
  json lemma_entries = json::array();
  for (const auto& e : lemma.entries) {
    json r = json::array();
    for (const auto& q : e.residual) r.push_back(format_rat(q));
    lemma_entries.push_back({{"i", e.i}, {"j", e.j}, {"residual", r}});
  }
  return {{"space", space_to_json(data.base)},
          {"dim_gplus", data.dim()},
          {"dim_V", data.v_basis.size()},
          {"gplus_basis", gplus},
          {"v_basis", vb},
          {"structure", structure},
          {"action_on_vdual", actions},
          {"cocycle", rat_matrix_to_json(data.cocycle)},
          {"phi", rat_matrix_to_json(data.phi)},
          {"lemma1", {{"passes", lemma.passes}, {"entries", lemma_entries}}}};
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("'" + path.string() + "': " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << j.dump(2) << "\n";
}

}  // namespace rquant::io
