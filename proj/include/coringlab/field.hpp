#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "coringlab/errors.hpp"
#include "coringlab/rng.hpp"

namespace coringlab {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class Field;

/// Element of an exact computable field. The payload is one of
///   - residue in [0, p) for a prime field,
///   - reduced fraction for the rationals,
///   - coefficient vector (ascending powers of the generator) for a simple
///     extension of GF(p) or of Q.
/// A fingerprint of the owning field spec travels with the value so that
/// accidental cross-field arithmetic raises MixedFieldError instead of
/// silently producing garbage.
class Scalar {
  public:
    using Payload = std::variant<std::int64_t, Rat, std::vector<std::int64_t>, std::vector<Rat>>;

    Scalar() : payload_(std::int64_t{0}), fkey_(0) {}
    Scalar(Payload p, std::uint64_t fkey) : payload_(std::move(p)), fkey_(fkey) {}

    const Payload& payload() const { return payload_; }
    std::uint64_t fkey() const { return fkey_; }

    bool is_zero() const;
    bool operator==(const Scalar& other) const { return fkey_ == other.fkey_ && payload_ == other.payload_; }
    bool operator!=(const Scalar& other) const { return !(*this == other); }

  private:
    Payload payload_;
    std::uint64_t fkey_;
};

/// FieldSpec made operational: characteristic 0 or prime, with an optional
/// monic minimal polynomial over the prime field. Cheap to copy (shared
/// immutable data). All scalar arithmetic goes through this class.
class Field {
  public:
    static Field rationals();
    static Field prime_field(std::int64_t p);
    /// Simple extension of GF(p) (p > 0) or of Q (p = 0). `minpoly` lists
    /// coefficients c0..cn ascending; the polynomial must be monic and is
    /// checked irreducible for degree <= 4 (full factor enumeration on small
    /// finite fields; root search plus integer quadratic-factor search over Q).
    static Field extension(std::int64_t p, const std::vector<Rat>& minpoly);

    std::int64_t characteristic() const;
    int degree() const;  // extension degree; 1 for prime fields / Q
    bool is_rationals() const { return characteristic() == 0 && degree() == 1; }
    bool is_extension() const { return degree() > 1; }
    const std::vector<Rat>& minpoly() const;  // ascending, monic; empty when degree()==1
    std::uint64_t fkey() const;
    /// Number of elements, if finite and representable.
    std::optional<std::uint64_t> order() const;

    bool operator==(const Field& other) const { return fkey() == other.fkey(); }
    bool operator!=(const Field& other) const { return !(*this == other); }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long n) const;
    Scalar from_rat(const Rat& r) const;
    /// Generator of the extension (the class of x); requires degree() > 1.
    Scalar generator() const;
    /// Element with the given coefficient vector over the prime field.
    Scalar from_coeffs(const std::vector<Rat>& coeffs) const;
    /// Coefficients of `a` over the prime field, length degree().
    std::vector<Rat> coeffs(const Scalar& a) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;  // throws Error on zero
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
    bool is_zero(const Scalar& a) const;
    bool equal(const Scalar& a, const Scalar& b) const;

    /// All elements of a finite field, in a fixed order. Throws for Q.
    std::vector<Scalar> elements(std::uint64_t cap = 1u << 16) const;
    /// Deterministic "small" scalar for test batteries: nonzero with
    /// probability ~ (q-1)/q; over Q a small fraction.
    Scalar random(Rng& rng) const;
    Scalar random_nonzero(Rng& rng) const;

    /// Roots of the minimal polynomial inside this field. Complete for
    /// finite fields (by enumeration) and for degree-2 extensions of Q.
    std::vector<Scalar> minpoly_roots_in_self() const;

    std::string to_string(const Scalar& a) const;
    std::string describe() const;  // e.g. "GF(2)", "Q", "GF(2^2)", "Q(x^2+1)"

    /// Validates that the scalar belongs to this field (fingerprint match);
    /// throws MixedFieldError otherwise.
    void require_own(const Scalar& a) const;

  private:
    struct Data;
    explicit Field(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
    std::shared_ptr<const Data> data_;
};

}  // namespace coringlab
