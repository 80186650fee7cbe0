#pragma once

#include <stdexcept>
#include <string>

namespace lagmatch {

/// Two operands live on lattices of different genus.
class LatticeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An integer matrix failed the check M^T J M = J.
class NotSymplectic : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A product left the monomial range i + |S| <= n of the symmetric-product
/// model; the truncation relations needed to rewrite it are not available.
class RelationNeeded : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A quantum formula was applied outside the (n, g) range where it holds.
class RegimeViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Descriptor data that parses but is not self-consistent (odd parity,
/// non-integral dimension, a cycle that does not close, ...).
class InconsistentDescriptor : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A spin-c structure or point-count function failing the admissibility
/// bookkeeping (negative or half-integral nu).
class Inadmissible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// det(I - M_end) = 0 for a sampled symplectic path.
class DegenerateEndpoint : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Consecutive samples of a symplectic path are too far apart to track
/// eigenvalues reliably.
class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input document violating the published schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lagmatch
