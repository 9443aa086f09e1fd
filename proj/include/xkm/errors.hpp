#pragma once

#include <stdexcept>
#include <string>

namespace xkm {

// Every failure the library can raise, so callers (and the CLI) can map
// conditions to behavior without string matching.
enum class ErrorKind {
  Empty,             // dataset has no rows or no columns
  RaggedRow,         // row length differs from the first row
  NonFinite,         // NaN or infinity in numeric input
  DimMismatch,       // points and centers disagree on dimension
  KTooLarge,         // asked for more clusters than points
  EmptyCluster,      // a label in [0,k) has no members
  EmptyLeaf,         // a tree leaf receives no points
  EmptyIndexSet,     // an index-set argument is empty
  Unsplittable,      // no feature has two distinct values to cut on
  DuplicateCenters,  // two centers identical in every coordinate
  TooLarge,          // instance exceeds a brute-force enumeration guard
  PropertyFailure,   // generator retries exhausted without a valid draw
  Io,                // file or parse failure
  BadModel,          // model JSON does not match the schema
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg, long a = -1, long b = -1)
      : std::runtime_error(msg), kind(kind), index_a(a), index_b(b) {}

  ErrorKind kind;
  // Meaning depends on kind: (row,col) for NonFinite, row for RaggedRow,
  // cluster/leaf label for EmptyCluster/EmptyLeaf, and so on.
  long index_a;
  long index_b;
};

namespace err {

inline Error empty(const std::string& what) {
  return Error(ErrorKind::Empty, "empty input: " + what);
}
inline Error ragged_row(long row) {
  return Error(ErrorKind::RaggedRow, "row " + std::to_string(row) + " has a different length", row);
}
inline Error non_finite(long row, long col) {
  return Error(ErrorKind::NonFinite,
               "non-finite value at (" + std::to_string(row) + "," + std::to_string(col) + ")",
               row, col);
}
inline Error dim_mismatch(long got, long want) {
  return Error(ErrorKind::DimMismatch,
               "dimension mismatch: " + std::to_string(got) + " vs " + std::to_string(want), got,
               want);
}
inline Error k_too_large(long k, long n) {
  return Error(ErrorKind::KTooLarge,
               "k=" + std::to_string(k) + " exceeds n=" + std::to_string(n), k, n);
}
inline Error empty_cluster(long label) {
  return Error(ErrorKind::EmptyCluster, "cluster " + std::to_string(label) + " has no members",
               label);
}
inline Error empty_leaf(long label) {
  return Error(ErrorKind::EmptyLeaf, "leaf " + std::to_string(label) + " receives no points",
               label);
}
inline Error empty_index_set(const std::string& what) {
  return Error(ErrorKind::EmptyIndexSet, "empty index set: " + what);
}
inline Error unsplittable(const std::string& what) {
  return Error(ErrorKind::Unsplittable, "unsplittable: " + what);
}
inline Error duplicate_centers(long a, long b) {
  return Error(ErrorKind::DuplicateCenters,
               "centers " + std::to_string(a) + " and " + std::to_string(b) + " are identical", a,
               b);
}
inline Error too_large(const std::string& what) {
  return Error(ErrorKind::TooLarge, "instance too large: " + what);
}
inline Error property_failure(const std::string& what) {
  return Error(ErrorKind::PropertyFailure, "property check failed: " + what);
}
inline Error io(const std::string& what) { return Error(ErrorKind::Io, what); }
inline Error bad_model(const std::string& what) {
  return Error(ErrorKind::BadModel, "bad model: " + what);
}

}  // namespace err
}  // namespace xkm
