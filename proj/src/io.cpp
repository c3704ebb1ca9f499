#include "gorbit/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <memory>
#include <set>
#include <sstream>

#include "gorbit/error.hpp"

namespace gorbit {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& message) {
  throw Error(ErrorKind::SchemaError, message, path);
}

void check_keys(const Json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed) known = known || item.key() == key;
    if (!known) schema_error(path + "." + item.key(), "unknown key '" + item.key() + "'");
  }
}

const Json& require(const Json& obj, const std::string& path, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) schema_error(path + "." + key, std::string("missing key '") + key + "'");
  return *it;
}

std::size_t index_at(const Json& v, const std::string& path, std::size_t bound) {
  if (!v.is_number_integer() || v.get<long long>() < 0) schema_error(path, "expected a non-negative integer");
  const auto value = v.get<std::size_t>();
  if (value >= bound) schema_error(path, "index " + std::to_string(value) + " out of range");
  return value;
}

Rational rational_at(const Json& v, const std::string& path) {
  if (!v.is_string()) schema_error(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const Error& e) {
    schema_error(path, e.what());
  }
}

const Json& array_at(const Json& v, const std::string& path) {
  if (!v.is_array()) schema_error(path, "expected an array");
  return v;
}

Vector vector_at(const Json& v, const std::string& path, std::size_t length) {
  array_at(v, path);
  if (v.size() != length) {
    schema_error(path, "expected " + std::to_string(length) + " entries, got " + std::to_string(v.size()));
  }
  Vector out;
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(rational_at(v[k], path + "[" + std::to_string(k) + "]"));
  return out;
}

}  // namespace

std::vector<Vector> vectors_at(const Json& v, const std::string& path, std::size_t length) {
  array_at(v, path);
  std::vector<Vector> out;
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(vector_at(v[k], path + "[" + std::to_string(k) + "]", length));
  return out;
}

namespace {

Matrix matrix_at(const Json& v, const std::string& path) {
  array_at(v, path);
  const std::size_t rows = v.size();
  Matrix out(rows, rows);
  for (std::size_t r = 0; r < rows; ++r) out.set_row(r, vector_at(v[r], path + "[" + std::to_string(r) + "]", rows));
  return out;
}

Json vectors_json(const std::vector<Vector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

std::string location_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IsotropyNotCompactType:
    case ErrorKind::NotASubalgebra:
      return "$.isotropy";
    case ErrorKind::MetricNotInvariant:
    case ErrorKind::InvalidArgument:
      return "$.metric";
    case ErrorKind::ComplementNotInvariant:
    case ErrorKind::LeviNotInvariant:
    case ErrorKind::DimensionMismatch:
      return "$.complement";
    default:
      return "$";
  }
}

}  // namespace

AlgebraFile parse_algebra_json(const Json& doc) {
  check_keys(doc, "$", {"format", "name", "dimension", "basis", "brackets", "isotropy", "metric", "complement"});
  AlgebraFile file;
  if (doc.contains("format")) {
    const Json& f = doc["format"];
    if (!f.is_string() || f.get<std::string>() != kAlgebraFormat) {
      schema_error("$.format", std::string("expected \"") + kAlgebraFormat + "\"");
    }
  }
  const Json& name = require(doc, "$", "name");
  if (!name.is_string()) schema_error("$.name", "expected a string");
  file.name = name.get<std::string>();

  const Json& dim = require(doc, "$", "dimension");
  if (!dim.is_number_integer() || dim.get<long long>() < 1) schema_error("$.dimension", "expected a positive integer");
  file.dimension = dim.get<std::size_t>();
  if (file.dimension > kDefaultDimensionCap) {
    schema_error("$.dimension", "dimension exceeds the cap of " + std::to_string(kDefaultDimensionCap));
  }
  const std::size_t n = file.dimension;

  const Json& basis = array_at(require(doc, "$", "basis"), "$.basis");
  if (basis.size() != n) schema_error("$.basis", "expected " + std::to_string(n) + " names");
  std::set<std::string> seen_names;
  for (std::size_t k = 0; k < n; ++k) {
    if (!basis[k].is_string()) schema_error("$.basis[" + std::to_string(k) + "]", "expected a string");
    file.basis.push_back(basis[k].get<std::string>());
    if (!seen_names.insert(file.basis.back()).second) {
      schema_error("$.basis[" + std::to_string(k) + "]", "duplicate basis name");
    }
  }

  const Json& brackets = array_at(require(doc, "$", "brackets"), "$.brackets");
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    const std::string path = "$.brackets[" + std::to_string(b) + "]";
    const Json& entry = brackets[b];
    check_keys(entry, path, {"i", "j", "terms"});
    const std::size_t i = index_at(require(entry, path, "i"), path + ".i", n);
    const std::size_t j = index_at(require(entry, path, "j"), path + ".j", n);
    if (i >= j) schema_error(path, "brackets must have i < j");
    if (file.brackets.count({i, j})) schema_error(path, "duplicate bracket entry");
    const Json& terms = array_at(require(entry, path, "terms"), path + ".terms");
    std::vector<BracketTerm> out;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tp = path + ".terms[" + std::to_string(t) + "]";
      check_keys(terms[t], tp, {"k", "c"});
      out.push_back({index_at(require(terms[t], tp, "k"), tp + ".k", n), rational_at(require(terms[t], tp, "c"), tp + ".c")});
    }
    file.brackets[{i, j}] = std::move(out);
  }

  file.isotropy = vectors_at(require(doc, "$", "isotropy"), "$.isotropy", n);

  const Json& metric = require(doc, "$", "metric");
  check_keys(metric, "$.metric", {"type", "matrix", "factor"});
  const Json& type = require(metric, "$.metric", "type");
  if (type == "explicit") {
    if (metric.contains("factor")) schema_error("$.metric.factor", "unexpected for an explicit metric");
    file.metric = MetricSpec::explicit_matrix(matrix_at(require(metric, "$.metric", "matrix"), "$.metric.matrix"));
  } else if (type == "killing_multiple") {
    if (metric.contains("matrix")) schema_error("$.metric.matrix", "unexpected for a killing_multiple metric");
    file.metric = MetricSpec::killing_multiple(rational_at(require(metric, "$.metric", "factor"), "$.metric.factor"));
  } else {
    schema_error("$.metric.type", "expected \"explicit\" or \"killing_multiple\"");
  }

  if (doc.contains("complement")) {
    const Json& c = doc["complement"];
    check_keys(c, "$.complement", {"strategy", "levi", "m", "form"});
    const Json& strategy = require(c, "$.complement", "strategy");
    const auto parsed = strategy.is_string() ? parse_strategy(strategy.get<std::string>()) : std::nullopt;
    if (!parsed) schema_error("$.complement.strategy", "unknown complement strategy");
    ComplementFileSpec spec;
    spec.strategy = *parsed;
    if (c.contains("levi")) spec.levi = vectors_at(c["levi"], "$.complement.levi", n);
    if (c.contains("m")) spec.m = vectors_at(c["m"], "$.complement.m", n);
    if (c.contains("form")) {
      spec.form = matrix_at(c["form"], "$.complement.form");
      if (spec.form->rows() != n) schema_error("$.complement.form", "form must be dimension x dimension");
    }
    file.complement = std::move(spec);
  }
  return file;
}

AlgebraFile parse_algebra_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    schema_error("$", std::string("invalid JSON: ") + e.what());
  }
  return parse_algebra_json(doc);
}

AlgebraFile read_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra_text(buffer.str());
}

Json to_json(const AlgebraFile& file) {
  Json brackets = Json::array();
  for (const auto& [key, terms] : file.brackets) {
    Json t = Json::array();
    for (const auto& term : terms) t.push_back({{"k", term.k}, {"c", to_string(term.c)}});
    brackets.push_back({{"i", key.first}, {"j", key.second}, {"terms", t}});
  }
  Json metric;
  if (file.metric.kind == MetricSpec::Kind::Explicit) {
    metric = {{"type", "explicit"}, {"matrix", to_json(file.metric.matrix)}};
  } else {
    metric = {{"type", "killing_multiple"}, {"factor", to_string(file.metric.factor)}};
  }
  Json doc = {{"format", kAlgebraFormat},
              {"name", file.name},
              {"dimension", file.dimension},
              {"basis", file.basis},
              {"brackets", brackets},
              {"isotropy", vectors_json(file.isotropy)},
              {"metric", metric}};
  if (file.complement) {
    Json c = {{"strategy", to_string(file.complement->strategy)}};
    if (file.complement->levi) c["levi"] = vectors_json(*file.complement->levi);
    if (file.complement->m) c["m"] = vectors_json(*file.complement->m);
    if (file.complement->form) c["form"] = to_json(*file.complement->form);
    doc["complement"] = c;
  }
  return doc;
}

LieAlgebra build_algebra(const AlgebraFile& file) {
  try {
    return LieAlgebra(file.name, file.basis, file.brackets);
  } catch (const Error& e) {
    throw Error(e.kind(), e.what(), "$.brackets");
  }
}

std::optional<Subspace> levi_of(const AlgebraFile& file) {
  if (!file.complement || !file.complement->levi) return std::nullopt;
  return Subspace(file.dimension, *file.complement->levi);
}

MetricReductiveSpace build_space(const AlgebraFile& file) {
  auto g = std::make_shared<const LieAlgebra>(build_algebra(file));
  const Subspace h(file.dimension, file.isotropy);
  ComplementSpec spec;
  if (file.complement) {
    spec.strategy = file.complement->strategy;
    spec.levi = levi_of(file);
    if (file.complement->m) spec.m = Subspace(file.dimension, *file.complement->m);
    spec.ambient_form = file.complement->form;
  }
  try {
    return build_reductive(g, h, file.metric, spec);
  } catch (const Error& e) {
    if (!e.location().empty()) throw;
    throw Error(e.kind(), e.what(), location_for(e.kind()));
  }
}

AlgebraFile algebra_file_of(const MetricReductiveSpace& space, const std::optional<Subspace>& levi) {
  const LieAlgebra& g = space.g();
  AlgebraFile file;
  file.name = g.name();
  file.dimension = g.dim();
  file.basis = g.basis_names();
  file.brackets = g.table();
  file.isotropy = space.h().basis();
  file.metric = MetricSpec::explicit_matrix(space.ip());
  ComplementFileSpec c;
  c.strategy = ComplementStrategy::Explicit;
  c.m = space.m().basis();
  if (levi) c.levi = levi->basis();
  file.complement = std::move(c);
  return file;
}

AlgebraFile algebra_file_of(const LieAlgebra& g, const Matrix& metric) {
  AlgebraFile file;
  file.name = g.name();
  file.dimension = g.dim();
  file.basis = g.basis_names();
  file.brackets = g.table();
  file.metric = MetricSpec::explicit_matrix(metric);
  ComplementFileSpec c;
  c.strategy = ComplementStrategy::Explicit;
  c.m = Subspace::full(g.dim()).basis();
  file.complement = std::move(c);
  return file;
}

std::string canonical_dump(const Json& doc) { return doc.dump(); }

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorKind::InternalInconsistency, "SHA-256 computation failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < length; ++k) {
    out.push_back(hex[digest[k] >> 4]);
    out.push_back(hex[digest[k] & 15]);
  }
  return out;
}

}  // namespace gorbit
