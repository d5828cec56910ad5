#include "plqo/structure_io.hpp"

#include "plqo/errors.hpp"

#include <fstream>

namespace plqo {

using nlohmann::json;

PropSymbol parse_symbol(const std::string& text) {
  if (text.size() < 2 || text[0] != 'B' ||
      text.find_first_not_of("0123456789", 1) != std::string::npos)
    throw Error(ErrorCode::Parse, "not a symbol: '" + text + "'");
  return PropSymbol{static_cast<unsigned>(std::stoul(text.substr(1)))};
}

namespace {

bool contains_float(const json& j) {
  if (j.is_number_float()) return true;
  if (j.is_array() || j.is_object())
    for (const auto& e : j)
      if (contains_float(e)) return true;
  return false;
}

RadicalScalar exact_real(const json& j) {
  if (j.is_string()) return RadicalScalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return RadicalScalar(Rational(j.get<long>()));
  throw Error(ErrorCode::InvalidStructure, "expected an exact scalar, got " + j.dump());
}

double float_real(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return RadicalScalar::parse(j.get<std::string>()).to_double();
  throw Error(ErrorCode::InvalidStructure, "expected a scalar, got " + j.dump());
}

// [re, im] or a bare real.
ComplexScalar exact_scalar(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw Error(ErrorCode::InvalidStructure, "complex scalar needs [re, im]");
    return {exact_real(j[0]), exact_real(j[1])};
  }
  return {exact_real(j)};
}

std::complex<double> float_scalar(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw Error(ErrorCode::InvalidStructure, "complex scalar needs [re, im]");
    return {float_real(j[0]), float_real(j[1])};
  }
  return {float_real(j), 0.0};
}

template <class S, class Conv>
BasicStructure<S> explicit_structure(const json& j, const Conv& conv, double tol) {
  if (!j.contains("dim") || !j.contains("state") || !j.contains("pqvs"))
    throw Error(ErrorCode::InvalidStructure, "structure needs dim, state and pqvs");
  const auto dim = j.at("dim").get<std::size_t>();
  const json& st = j.at("state");
  if (!st.is_array() || st.size() != dim)
    throw Error(ErrorCode::DimMismatch, "state length differs from dim");
  std::vector<S> state;
  for (const auto& a : st) state.push_back(conv(a));
  std::map<PropSymbol, BasicPqv<S>> pqvs;
  for (const auto& [name, m] : j.at("pqvs").items()) {
    if (!m.is_array() || m.size() != dim)
      throw Error(ErrorCode::DimMismatch, name + " projector row count differs from dim");
    Matrix<S> p(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      if (!m[r].is_array() || m[r].size() != dim)
        throw Error(ErrorCode::DimMismatch, name + " projector row length differs from dim");
      for (std::size_t c = 0; c < dim; ++c) p(r, c) = conv(m[r][c]);
    }
    pqvs.emplace(parse_symbol(name), BasicPqv<S>(std::move(p), tol));
  }
  return BasicStructure<S>(std::move(state), std::move(pqvs), tol);
}

GenericModelSpec generic_from_json(const json& g) {
  GenericModelSpec spec;
  for (const auto& s : g.at("symbols")) spec.symbols.push_back(parse_symbol(s.get<std::string>()));
  if (g.contains("nc"))
    for (const auto& p : g.at("nc")) {
      if (!p.is_array() || p.size() != 2)
        throw Error(ErrorCode::SpecInvalid, "incompatible pair must list two symbols");
      spec.nc.emplace_back(parse_symbol(p[0].get<std::string>()),
                           parse_symbol(p[1].get<std::string>()));
    }
  for (const auto& m : g.at("masses")) {
    if (m.is_string()) spec.masses.push_back(parse_rational(m.get<std::string>()));
    else if (m.is_number_integer()) spec.masses.push_back(Rational(m.get<long>()));
    else throw Error(ErrorCode::SpecInvalid, "masses must be rational strings");
  }
  spec.validate();
  return spec.normalized();
}

json real_to_json(const RadicalScalar& r) { return r.to_string(); }

}  // namespace

FloatStructure to_float(const QuantumStructure& I, double tol) {
  auto conv = [](const ComplexScalar& z) {
    return std::complex<double>(z.re().to_double(), z.im().to_double());
  };
  std::vector<std::complex<double>> state;
  for (const auto& a : I.state()) state.push_back(conv(a));
  std::map<PropSymbol, FloatPqv> pqvs;
  for (const auto& [s, p] : I.pqvs()) {
    const auto& m = p.up_projector();
    Matrix<std::complex<double>> f(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) f(r, c) = conv(m(r, c));
    pqvs.emplace(s, FloatPqv(std::move(f), tol));
  }
  return FloatStructure(std::move(state), std::move(pqvs), tol);
}

LoadedStructure structure_from_json(const json& j, bool force_float, double tol) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidStructure, "structure must be a JSON object");
  try {
    LoadedStructure out;
    if (j.contains("assignment")) out.assignment = assignment_from_json(j.at("assignment"));
    if (j.contains("generic")) {
      out.generic = generic_from_json(j.at("generic"));
      QuantumStructure I = build_generic(*out.generic);
      if (force_float) out.approx = to_float(I, tol);
      else out.exact = std::move(I);
      return out;
    }
    if (force_float || contains_float(j))
      out.approx = explicit_structure<std::complex<double>>(j, float_scalar, tol);
    else
      out.exact = explicit_structure<ComplexScalar>(j, exact_scalar, tol);
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidStructure, std::string("malformed structure: ") + e.what());
  }
}

LoadedStructure load_structure_file(const std::string& path, bool force_float, double tol) {
  return structure_from_json(read_json_file(path), force_float, tol);
}

json structure_to_json(const QuantumStructure& I) {
  json out;
  out["dim"] = I.dim();
  json st = json::array();
  for (const auto& a : I.state()) st.push_back({real_to_json(a.re()), real_to_json(a.im())});
  out["state"] = st;
  json pqvs = json::object();
  for (const auto& [s, p] : I.pqvs()) {
    const auto& m = p.up_projector();
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c)
        row.push_back({real_to_json(m(r, c).re()), real_to_json(m(r, c).im())});
      rows.push_back(row);
    }
    pqvs[to_string(s)] = rows;
  }
  out["pqvs"] = pqvs;
  return out;
}

json generic_to_json(const GenericModelSpec& raw) {
  const GenericModelSpec spec = raw.normalized();
  json g;
  g["symbols"] = json::array();
  for (const auto& s : spec.symbols) g["symbols"].push_back(to_string(s));
  g["nc"] = json::array();
  for (const auto& [a, b] : spec.nc) g["nc"].push_back({to_string(a), to_string(b)});
  g["masses"] = json::array();
  for (const auto& m : spec.masses) g["masses"].push_back(to_string(m));
  return {{"generic", g}};
}

json assignment_to_json(const Assignment& rho) {
  json out = json::object();
  for (const auto& [k, q] : rho.numeric) out["x" + std::to_string(k)] = to_string(q);
  return out;
}

Assignment assignment_from_json(const json& j) {
  const json& body = j.contains("assignment") ? j.at("assignment") : j;
  if (!body.is_object()) throw Error(ErrorCode::Parse, "assignment must be a JSON object");
  Assignment rho;
  for (const auto& [name, v] : body.items()) {
    if (name.size() < 2 || name[0] != 'x' ||
        name.find_first_not_of("0123456789", 1) != std::string::npos)
      throw Error(ErrorCode::Parse, "not a numeric variable: '" + name + "'");
    const auto k = static_cast<unsigned>(std::stoul(name.substr(1)));
    if (v.is_string()) rho.numeric[k] = parse_rational(v.get<std::string>());
    else if (v.is_number_integer()) rho.numeric[k] = Rational(v.get<long>());
    else if (v.is_number_float()) rho.numeric[k] = Rational(v.get<double>());
    else throw Error(ErrorCode::Parse, "assignment values must be numbers");
  }
  return rho;
}

Assignment load_assignment_file(const std::string& path) {
  return assignment_from_json(read_json_file(path));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Io, path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << j.dump(2) << "\n";
  if (!out) throw Error(ErrorCode::Io, "failed writing " + path);
}

}  // namespace plqo
