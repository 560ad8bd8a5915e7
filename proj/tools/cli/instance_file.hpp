#pragma once

// JSON instance files. Rationals are written as strings ("3/4", "-2"); integers are
// accepted on input. Indices in files are 1-based.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "qapblock/error.hpp"
#include "qapblock/matrix_classes.hpp"

namespace qapblock::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kFormatTag = "qapblock-instance/1";

using MatrixOrSpec = std::variant<SymMatrix, ProductSpec, SumSpec, BlockSpec, MultiCutSpec, OneLambdaOneSpec>;

struct Metadata {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> provenance;
  std::optional<Rational> threshold;
  friend bool operator==(const Metadata&, const Metadata&) = default;
};

struct InstanceFile {
  std::optional<MatrixOrSpec> a;
  std::optional<MatrixOrSpec> b;
  std::optional<SymMatrix> pattern;
  Metadata metadata;
  Json sidecar;  // free-form record attached by reductions; null when absent
  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

/// Malformed document. `pointer()` is the JSON pointer of the offending value.
class ParseError : public InvalidInput {
 public:
  ParseError(std::string pointer, const std::string& message)
      : InvalidInput((pointer.empty() ? std::string("/") : pointer) + ": " + message), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

SymMatrix materialize(const MatrixOrSpec& m);
std::string_view kind_name(const MatrixOrSpec& m);

Json to_json(const Rational& x);
Json to_json(const SymMatrix& m);
Json to_json(const MatrixOrSpec& m);

Json parse_json(std::string_view text);
Rational rational_from_json(const Json& j, const std::string& pointer);
std::size_t count_from_json(const Json& j, const std::string& pointer);
SymMatrix matrix_from_json(const Json& j, const std::string& pointer);
MatrixOrSpec spec_from_json(const Json& j, const std::string& pointer);

InstanceFile parse_instance(std::string_view text);
std::string write_instance(const InstanceFile& file);

std::string read_text(const std::filesystem::path& path);

}  // namespace qapblock::cli
