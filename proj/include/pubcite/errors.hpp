#pragma once

#include <stdexcept>
#include <string>

namespace pubcite {

/// Base class for every error this library throws on bad input.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A data line that cannot be parsed into a record (or a malformed
/// alias/taxonomy line). Fatal: the file is rejected.
struct MalformedLine : Error {
  MalformedLine(int line_no_, std::string reason_)
      : Error("line " + std::to_string(line_no_) + ": " + reason_),
        line_no(line_no_),
        reason(std::move(reason_)) {}
  int line_no;
  std::string reason;
};

struct DuplicateRecordId : Error {
  explicit DuplicateRecordId(std::string id_)
      : Error("duplicate record_id: " + id_), id(std::move(id_)) {}
  std::string id;
};

struct DuplicateCategory : Error {
  explicit DuplicateCategory(std::string category_)
      : Error("category mapped to two disciplines: " + category_),
        category(std::move(category_)) {}
  std::string category;
};

struct EmptyAfterNormalization : Error {
  explicit EmptyAfterNormalization(std::string raw_)
      : Error("publisher name empty after normalization: \"" + raw_ + "\""),
        raw(std::move(raw_)) {}
  std::string raw;
};

/// An alias file entry whose canonical side is itself a variant of a
/// different canonical name. Chains are rejected at load time so that
/// resolution is always single-pass.
struct AliasChain : Error {
  AliasChain(std::string canonical_, std::string target_)
      : Error("alias chain: canonical \"" + canonical_ + "\" is itself aliased to \"" + target_ + "\""),
        canonical(std::move(canonical_)),
        target(std::move(target_)) {}
  std::string canonical;
  std::string target;
};

struct ConflictingAlias : Error {
  explicit ConflictingAlias(std::string variant_)
      : Error("variant \"" + variant_ + "\" aliased to two different canonical names"),
        variant(std::move(variant_)) {}
  std::string variant;
};

struct UnsupportedFormat : Error {
  explicit UnsupportedFormat(std::string format_)
      : Error("unsupported format: " + format_), format(std::move(format_)) {}
  std::string format;
};

struct IoError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace pubcite
