#pragma once

#include <stdexcept>
#include <string>

namespace spectra {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A constructor rejected its input (size cap, invalid tables, mismatched
/// ring references, malformed presentations).
class ConstructionError : public Error {
public:
  using Error::Error;
};

/// Two routes that must agree by theorem disagreed. This always means an
/// engine bug and is never a normal verdict; the message names the failed
/// equivalence and the witness ring.
class ConsistencyError : public Error {
public:
  using Error::Error;
};

/// Three-valued outcome for searches that carry a node budget.
enum class Verdict { yes, no, unknown };

/// Global cap on the number of elements a table ring may have. Constructors
/// check it before allocating tables.
int ring_size_cap();
void set_ring_size_cap(int cap);

}  // namespace spectra
