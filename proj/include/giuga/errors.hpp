#pragma once

#include <stdexcept>
#include <string>

namespace giuga {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured effort or size budget was exceeded (factoring effort,
/// naive power-sum cutoff, search bound, Bernoulli cap).
class ResourceExhausted : public Error {
public:
    using Error::Error;
};

/// crt_combine was given moduli that are not pairwise coprime.
class NonCoprimeModuli : public Error {
public:
    using Error::Error;
};

/// rational_mod was asked to reduce a rational whose denominator shares a
/// factor with the modulus.
class DenominatorNotInvertible : public Error {
public:
    using Error::Error;
};

/// k_min requested for a number that is not a Giuga number.
class NotGiuga : public Error {
public:
    using Error::Error;
};

/// Caller-supplied factor hints do not multiply to n or contain a composite.
class BadFactorHint : public Error {
public:
    using Error::Error;
};

/// The fast power-sum path needs a factorization that is neither supplied
/// nor consistent with the queried value.
class MissingFactorization : public Error {
public:
    using Error::Error;
};

/// An operation's stated precondition does not hold (e.g. fast power-sum
/// exponent below a prime-power exponent); callers may fall back.
class PreconditionViolated : public Error {
public:
    using Error::Error;
};

/// Bernoulli index beyond the configured table cap.
class IndexTooLarge : public Error {
public:
    using Error::Error;
};

/// Catalog data failed its load-time invariants.
class CorruptCatalog : public Error {
public:
    using Error::Error;
};

/// Checkpoint file exists but cannot be parsed or is inconsistent.
class CorruptCheckpoint : public Error {
public:
    using Error::Error;
};

} // namespace giuga
