#include "zinbiel/json_io.hpp"

#include <fstream>
#include <sstream>

namespace zinbiel::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError("field '" + path + "': " + what);
}

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing");
  return *it;
}

Index count_from_json(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(path, "expected a non-negative integer");
  return static_cast<Index>(j.get<long long>());
}

// 1-based index in [1, bound].
Index index_from_text(const std::string& text, Index bound, const std::string& path) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c) != 0; }))
    fail(path, "index '" + text + "' is not a positive integer");
  const long long i = std::stoll(text);
  if (i < 1 || i > bound) fail(path, "index " + text + " is outside 1.." + std::to_string(bound));
  return static_cast<Index>(i - 1);
}

std::pair<Index, Index> pair_from_text(const std::string& key, Index b1, Index b2, const std::string& path) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) fail(path, "key '" + key + "' must look like \"i,j\"");
  return {index_from_text(key.substr(0, comma), b1, path), index_from_text(key.substr(comma + 1), b2, path)};
}

}  // namespace

json parse(std::string_view text, const std::string& source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw InputError(source + ":" + std::to_string(line) + ": malformed JSON (" + e.what() + ")");
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path);
}

json to_json(const Rational& q) { return to_string(q); }

json sparse_vector_to_json(const Vector& v) {
  json out = json::object();
  for (Index k = 0; k < v.size(); ++k)
    if (v(k) != 0) out[std::to_string(k + 1)] = to_json(v(k));
  return out;
}

json tensor_to_json(const Tensor& t) {
  json out = json::object();
  for (Index i = 0; i < t.dim(0); ++i)
    for (Index j = 0; j < t.dim(1); ++j) {
      json fiber = sparse_vector_to_json(t.fiber(i, j));
      if (!fiber.empty()) out[std::to_string(i + 1) + "," + std::to_string(j + 1)] = std::move(fiber);
    }
  return out;
}

json map_to_json(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.cols(); ++i) {
    json row = json::array();
    for (Index k = 0; k < m.rows(); ++k) row.push_back(to_json(m(k, i)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const Algebra& a) {
  json out{{"dim", a.dim}, {"products", tensor_to_json(a.mult)}};
  if (!a.names.empty()) out["names"] = a.names;
  return out;
}

json to_json(const ExtendingDatum& d) {
  return {{"base", to_json(d.base)},
          {"dimV", d.dimV},
          {"actL", tensor_to_json(d.actL)},
          {"actR", tensor_to_json(d.actR)},
          {"projL", tensor_to_json(d.projL)},
          {"projR", tensor_to_json(d.projR)},
          {"omega", tensor_to_json(d.omega)},
          {"star", tensor_to_json(d.star)}};
}

json to_json(const Bimodule& b) {
  return {{"base", to_json(b.base)},
          {"dimV", b.dimV},
          {"actR", tensor_to_json(b.actR)},
          {"actL", tensor_to_json(b.actL)}};
}

json to_json(const CrossedSystem& cs) {
  return {{"base", to_json(cs.base)},
          {"top", to_json(cs.top)},
          {"projR", tensor_to_json(cs.projR)},
          {"projL", tensor_to_json(cs.projL)},
          {"omega", tensor_to_json(cs.omega)}};
}

json to_json(const MatchedPair& mp) {
  return {{"base", to_json(mp.base)},
          {"top", to_json(mp.top)},
          {"actL", tensor_to_json(mp.actL)},
          {"projR", tensor_to_json(mp.projR)},
          {"projL", tensor_to_json(mp.projL)},
          {"actR", tensor_to_json(mp.actR)}};
}

json to_json(const FlagDatum& fd) {
  json mu = json::array();
  for (Index i = 0; i < fd.mu.size(); ++i) mu.push_back(to_json(fd.mu(i)));
  return {{"base", to_json(fd.base)},
          {"x0", sparse_vector_to_json(fd.x0)},
          {"k0", to_json(fd.k0)},
          {"mu", std::move(mu)},
          {"D", map_to_json(fd.D)},
          {"T", map_to_json(fd.T)}};
}

json to_json(const SolutionFamily& family) {
  json basis = json::array();
  for (const auto& m : family.linear_basis) basis.push_back(map_to_json(m));
  json residuals = json::array();
  for (const auto& p : family.residuals) residuals.push_back(to_string(p));
  return {{"linear_basis", std::move(basis)}, {"residuals", std::move(residuals)}};
}

json to_json(const CheckReport& report) {
  json conditions = json::array();
  for (const auto& r : report.results) {
    json c{{"label", r.label}, {"variables", r.variables}, {"passed", r.passed}};
    if (r.witness) {
      json tuple = json::array();
      for (Index i : r.witness->basis_tuple) tuple.push_back(i + 1);
      json lhs = json::array(), rhs = json::array();
      for (Index k = 0; k < r.witness->lhs.size(); ++k) lhs.push_back(to_json(r.witness->lhs(k)));
      for (Index k = 0; k < r.witness->rhs.size(); ++k) rhs.push_back(to_json(r.witness->rhs(k)));
      c["witness"] = {{"basis_tuple", std::move(tuple)}, {"lhs", std::move(lhs)}, {"rhs", std::move(rhs)}};
    }
    conditions.push_back(std::move(c));
  }
  json out{{"passed", report.passed()}, {"conditions", std::move(conditions)}};
  if (!report.notes.empty()) out["notes"] = report.notes;
  return out;
}

Rational rational_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(Integer(j.get<long long>()));
  if (!j.is_string()) fail(path, "expected a rational written as a string such as \"3/4\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

Vector sparse_vector_from_json(const json& j, Index n, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object of the form {\"k\": \"q\"}");
  Vector v = Vector::Zero(n);
  for (const auto& [key, value] : j.items()) {
    const std::string sub = path + "." + key;
    v(index_from_text(key, n, sub)) = rational_from_json(value, sub);
  }
  return v;
}

Tensor tensor_from_json(const json& j, Index d1, Index d2, Index d3, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object of the form {\"i,j\": {\"k\": \"q\"}}");
  Tensor t(d1, d2, d3);
  for (const auto& [key, fiber] : j.items()) {
    const std::string sub = path + "." + key;
    const auto [i, k] = pair_from_text(key, d1, d2, sub);
    t.set_fiber(i, k, sparse_vector_from_json(fiber, d3, sub));
  }
  return t;
}

Matrix map_from_json(const json& j, Index dim_in, Index dim_out, const std::string& path) {
  if (!j.is_array() || static_cast<Index>(j.size()) != dim_in)
    fail(path, "expected " + std::to_string(dim_in) + " rows");
  Matrix m(dim_out, dim_in);
  for (Index i = 0; i < dim_in; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    const std::string sub = path + "[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<Index>(row.size()) != dim_out)
      fail(sub, "expected a row of length " + std::to_string(dim_out));
    for (Index k = 0; k < dim_out; ++k)
      m(k, i) = rational_from_json(row[static_cast<std::size_t>(k)], sub + "[" + std::to_string(k) + "]");
  }
  return m;
}

Algebra algebra_from_json(const json& j, const std::string& path) {
  const Index n = count_from_json(field(j, "dim", path), path + ".dim");
  Algebra a(n);
  if (j.contains("products")) a.mult = tensor_from_json(j["products"], n, n, n, path + ".products");
  if (j.contains("names")) {
    const json& names = j["names"];
    if (!names.is_array() || static_cast<Index>(names.size()) != n)
      fail(path + ".names", "expected " + std::to_string(n) + " names");
    for (const auto& s : names) {
      if (!s.is_string()) fail(path + ".names", "names must be strings");
      a.names.push_back(s.get<std::string>());
    }
  }
  return a;
}

namespace {

Tensor optional_tensor(const json& j, const char* key, Index d1, Index d2, Index d3, const std::string& path) {
  if (!j.contains(key)) return Tensor(d1, d2, d3);
  return tensor_from_json(j[key], d1, d2, d3, path + "." + key);
}

}  // namespace

ExtendingDatum datum_from_json(const json& j, const std::string& path) {
  const Algebra base = algebra_from_json(field(j, "base", path), path + ".base");
  const Index m = count_from_json(field(j, "dimV", path), path + ".dimV");
  const Index n = base.dim;
  ExtendingDatum d = ExtendingDatum::trivial(base, m);
  d.actL = optional_tensor(j, "actL", m, n, m, path);
  d.actR = optional_tensor(j, "actR", n, m, m, path);
  d.projL = optional_tensor(j, "projL", n, m, n, path);
  d.projR = optional_tensor(j, "projR", m, n, n, path);
  d.omega = optional_tensor(j, "omega", m, m, n, path);
  d.star = optional_tensor(j, "star", m, m, m, path);
  return d;
}

Bimodule bimodule_from_json(const json& j, const std::string& path) {
  const Algebra base = algebra_from_json(field(j, "base", path), path + ".base");
  const Index m = count_from_json(field(j, "dimV", path), path + ".dimV");
  const Index n = base.dim;
  return {base, m, optional_tensor(j, "actR", n, m, m, path), optional_tensor(j, "actL", m, n, m, path)};
}

CrossedSystem crossed_from_json(const json& j, const std::string& path) {
  const Algebra z = algebra_from_json(field(j, "base", path), path + ".base");
  const Algebra w = algebra_from_json(field(j, "top", path), path + ".top");
  const Index n = z.dim, m = w.dim;
  return {z, w, optional_tensor(j, "projR", m, n, n, path), optional_tensor(j, "projL", n, m, n, path),
          optional_tensor(j, "omega", m, m, n, path)};
}

MatchedPair matched_from_json(const json& j, const std::string& path) {
  const Algebra z = algebra_from_json(field(j, "base", path), path + ".base");
  const Algebra w = algebra_from_json(field(j, "top", path), path + ".top");
  const Index n = z.dim, m = w.dim;
  return {z,
          w,
          optional_tensor(j, "actL", m, n, m, path),
          optional_tensor(j, "projR", m, n, n, path),
          optional_tensor(j, "projL", n, m, n, path),
          optional_tensor(j, "actR", n, m, m, path)};
}

FlagDatum flag_from_json(const json& j, const std::string& path) {
  FlagDatum fd = FlagDatum::zero(algebra_from_json(field(j, "base", path), path + ".base"));
  const Index n = fd.base.dim;
  if (j.contains("x0")) fd.x0 = sparse_vector_from_json(j["x0"], n, path + ".x0");
  if (j.contains("k0")) fd.k0 = rational_from_json(j["k0"], path + ".k0");
  if (j.contains("mu")) {
    const json& mu = j["mu"];
    if (!mu.is_array() || static_cast<Index>(mu.size()) != n)
      fail(path + ".mu", "expected " + std::to_string(n) + " entries");
    for (Index i = 0; i < n; ++i)
      fd.mu(i) = rational_from_json(mu[static_cast<std::size_t>(i)], path + ".mu[" + std::to_string(i) + "]");
  }
  if (j.contains("D")) fd.D = map_from_json(j["D"], n, n, path + ".D");
  if (j.contains("T")) fd.T = map_from_json(j["T"], n, n, path + ".T");
  return fd;
}

}  // namespace zinbiel::io
