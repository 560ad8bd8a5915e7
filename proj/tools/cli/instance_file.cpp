#include "cli/instance_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace qapblock::cli {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

std::string child(const std::string& pointer, std::string_view key) { return pointer + "/" + std::string(key); }
std::string child(const std::string& pointer, std::size_t index) { return pointer + "/" + std::to_string(index); }

const Json& require_key(const Json& obj, std::string_view key, const std::string& pointer) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(pointer, "missing key \"" + std::string(key) + "\"");
  return *it;
}

void reject_unknown_keys(const Json& obj, std::initializer_list<std::string_view> allowed, const std::string& pointer) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
      throw ParseError(child(pointer, it.key()), "unknown key");
    }
  }
}

void require_object(const Json& j, const std::string& pointer) {
  if (!j.is_object()) throw ParseError(pointer, "expected an object");
}

std::vector<Rational> vector_from_json(const Json& j, const std::string& pointer) {
  if (!j.is_array() || j.empty()) throw ParseError(pointer, "expected a non-empty array of rationals");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], child(pointer, i)));
  return out;
}

std::vector<std::size_t> sizes_from_json(const Json& j, const std::string& pointer) {
  if (!j.is_array() || j.empty()) throw ParseError(pointer, "expected a non-empty array of block sizes");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(count_from_json(j[i], child(pointer, i)));
  return out;
}

Json vector_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

// Library constructors throw InvalidInput on semantic violations; attach the location.
template <class F>
auto located(const std::string& pointer, F&& build) {
  try {
    return build();
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw ParseError(pointer, e.what());
  }
}

}  // namespace

SymMatrix materialize(const MatrixOrSpec& m) {
  return std::visit(Overloaded{[](const SymMatrix& dense) { return dense; },
                               [](const auto& spec) { return expand(spec); }},
                    m);
}

std::string_view kind_name(const MatrixOrSpec& m) {
  return std::visit(Overloaded{[](const SymMatrix&) { return std::string_view("dense"); },
                               [](const ProductSpec&) { return std::string_view("product"); },
                               [](const SumSpec&) { return std::string_view("sum"); },
                               [](const BlockSpec&) { return std::string_view("block"); },
                               [](const MultiCutSpec&) { return std::string_view("multicut"); },
                               [](const OneLambdaOneSpec&) { return std::string_view("one-lambda-one"); }},
                    m);
}

Json to_json(const Rational& x) { return x.str(); }

Json to_json(const SymMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.rows()) rows.push_back(vector_json(row));
  return rows;
}

Json to_json(const MatrixOrSpec& m) {
  Json out;
  out["kind"] = std::string(kind_name(m));
  std::visit(Overloaded{[&](const SymMatrix& dense) { out["rows"] = to_json(dense); },
                        [&](const ProductSpec& s) { out["alpha"] = vector_json(s.alpha()); },
                        [&](const SumSpec& s) { out["alpha"] = vector_json(s.alpha()); },
                        [&](const BlockSpec& s) {
                          out["pattern"] = to_json(s.pattern());
                          out["sizes"] = s.sizes();
                        },
                        [&](const MultiCutSpec& s) { out["sizes"] = s.sizes(); },
                        [&](const OneLambdaOneSpec& s) {
                          out["lambda"] = to_json(s.lambda());
                          out["r"] = s.r();
                          out["s"] = s.s();
                          out["t"] = s.t();
                        }},
             m);
  return out;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
}

Rational rational_from_json(const Json& j, const std::string& pointer) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return located(pointer, [&] { return Rational::parse(std::to_string(j.get<std::uint64_t>())); });
    return Rational(j.get<std::int64_t>());
  }
  if (!j.is_string()) throw ParseError(pointer, "expected a rational as a string such as \"3/4\"");
  return located(pointer, [&] { return Rational::parse(j.get<std::string>()); });
}

std::size_t count_from_json(const Json& j, const std::string& pointer) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw ParseError(pointer, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

SymMatrix matrix_from_json(const Json& j, const std::string& pointer) {
  if (!j.is_array() || j.empty()) throw ParseError(pointer, "expected a non-empty array of rows");
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string row_ptr = child(pointer, i);
    if (!j[i].is_array()) throw ParseError(row_ptr, "expected a row array");
    std::vector<Rational> row;
    for (std::size_t k = 0; k < j[i].size(); ++k) row.push_back(rational_from_json(j[i][k], child(row_ptr, k)));
    rows.push_back(std::move(row));
  }
  return located(pointer, [&] { return SymMatrix(rows); });
}

MatrixOrSpec spec_from_json(const Json& j, const std::string& pointer) {
  require_object(j, pointer);
  const Json& kind_json = require_key(j, "kind", pointer);
  if (!kind_json.is_string()) throw ParseError(child(pointer, "kind"), "expected a string");
  const std::string kind = kind_json.get<std::string>();
  if (kind == "dense") {
    reject_unknown_keys(j, {"kind", "rows"}, pointer);
    return matrix_from_json(require_key(j, "rows", pointer), child(pointer, "rows"));
  }
  if (kind == "product" || kind == "sum") {
    reject_unknown_keys(j, {"kind", "alpha"}, pointer);
    auto alpha = vector_from_json(require_key(j, "alpha", pointer), child(pointer, "alpha"));
    if (kind == "sum") return SumSpec(std::move(alpha));
    return located(pointer, [&] { return ProductSpec(std::move(alpha)); });
  }
  if (kind == "block") {
    reject_unknown_keys(j, {"kind", "pattern", "sizes"}, pointer);
    SymMatrix p = matrix_from_json(require_key(j, "pattern", pointer), child(pointer, "pattern"));
    auto sizes = sizes_from_json(require_key(j, "sizes", pointer), child(pointer, "sizes"));
    return located(pointer, [&] { return BlockSpec(std::move(p), std::move(sizes)); });
  }
  if (kind == "multicut") {
    reject_unknown_keys(j, {"kind", "sizes"}, pointer);
    auto sizes = sizes_from_json(require_key(j, "sizes", pointer), child(pointer, "sizes"));
    return located(pointer, [&] { return MultiCutSpec(std::move(sizes)); });
  }
  if (kind == "one-lambda-one") {
    reject_unknown_keys(j, {"kind", "lambda", "r", "s", "t"}, pointer);
    Rational lambda = rational_from_json(require_key(j, "lambda", pointer), child(pointer, "lambda"));
    const auto r = count_from_json(require_key(j, "r", pointer), child(pointer, "r"));
    const auto s = count_from_json(require_key(j, "s", pointer), child(pointer, "s"));
    const auto t = count_from_json(require_key(j, "t", pointer), child(pointer, "t"));
    return located(pointer, [&] { return OneLambdaOneSpec(lambda, r, s, t); });
  }
  throw ParseError(child(pointer, "kind"),
                   "unknown kind \"" + kind + "\" (expected dense, product, sum, block, multicut or one-lambda-one)");
}

InstanceFile parse_instance(std::string_view text) {
  const Json doc = parse_json(text);
  require_object(doc, "");
  reject_unknown_keys(doc, {"format", "A", "B", "pattern", "metadata", "sidecar"}, "");
  if (auto it = doc.find("format"); it != doc.end() && *it != std::string(kFormatTag)) {
    throw ParseError("/format", "unsupported format tag (expected \"" + std::string(kFormatTag) + "\")");
  }
  InstanceFile file;
  if (auto it = doc.find("A"); it != doc.end()) file.a = spec_from_json(*it, "/A");
  if (auto it = doc.find("B"); it != doc.end()) file.b = spec_from_json(*it, "/B");
  if (auto it = doc.find("pattern"); it != doc.end()) file.pattern = matrix_from_json(*it, "/pattern");
  if (file.a && file.b && materialize(*file.a).size() != materialize(*file.b).size()) {
    throw ParseError("/B", "dimension differs from A");
  }
  if (auto it = doc.find("metadata"); it != doc.end()) {
    require_object(*it, "/metadata");
    reject_unknown_keys(*it, {"seed", "provenance", "threshold"}, "/metadata");
    if (auto s = it->find("seed"); s != it->end()) {
      if (!s->is_number_unsigned()) throw ParseError("/metadata/seed", "expected a non-negative integer");
      file.metadata.seed = s->get<std::uint64_t>();
    }
    if (auto p = it->find("provenance"); p != it->end()) {
      if (!p->is_string()) throw ParseError("/metadata/provenance", "expected a string");
      file.metadata.provenance = p->get<std::string>();
    }
    if (auto t = it->find("threshold"); t != it->end()) {
      file.metadata.threshold = rational_from_json(*t, "/metadata/threshold");
    }
  }
  if (auto it = doc.find("sidecar"); it != doc.end()) file.sidecar = *it;
  return file;
}

std::string write_instance(const InstanceFile& file) {
  Json doc;
  doc["format"] = std::string(kFormatTag);
  if (file.a) doc["A"] = to_json(*file.a);
  if (file.b) doc["B"] = to_json(*file.b);
  if (file.pattern) doc["pattern"] = to_json(*file.pattern);
  const Metadata& meta = file.metadata;
  if (meta.seed || meta.provenance || meta.threshold) {
    Json m = Json::object();
    if (meta.seed) m["seed"] = *meta.seed;
    if (meta.provenance) m["provenance"] = *meta.provenance;
    if (meta.threshold) m["threshold"] = to_json(*meta.threshold);
    doc["metadata"] = std::move(m);
  }
  if (!file.sidecar.is_null()) doc["sidecar"] = file.sidecar;
  return doc.dump(2) + "\n";
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace qapblock::cli
