#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ansu {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exactnum
struct ZeroInverse : Error {
  using Error::Error;
};

// category
struct MalformedData : Error {
  using Error::Error;
};
struct NotModular : Error {
  using Error::Error;
};
struct UnsupportedSpec : Error {
  using Error::Error;
};
struct InconsistentPointedData : Error {
  using Error::Error;
};

// file formats; `pointer` is a JSON-pointer-style location of the offending key
struct SchemaError : Error {
  std::string pointer;
  SchemaError(std::string where, const std::string& what)
      : Error("schema error at " + where + ": " + what), pointer(std::move(where)) {}
};
struct ValidationError : Error {
  std::vector<std::string> report;
  explicit ValidationError(std::vector<std::string> entries)
      : Error("validation failed: " + join(entries)), report(std::move(entries)) {}

 private:
  static std::string join(const std::vector<std::string>& entries) {
    std::string out;
    for (const auto& e : entries) {
      if (!out.empty()) out += "; ";
      out += e;
    }
    return out;
  }
};

// frobenius
struct NotASubgroup : Error {
  using Error::Error;
};
struct NotIsotropic : Error {
  using Error::Error;
};
struct CocycleObstruction : Error {
  using Error::Error;
};
struct NotSpecial : Error {
  using Error::Error;
};
struct NotVerified : Error {
  using Error::Error;
};
struct NotPointed : Error {
  using Error::Error;
};

// blocks / manifolds
struct CategoryMismatch : Error {
  using Error::Error;
};
struct BadParameters : Error {
  using Error::Error;
};

}  // namespace ansu
