#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "floquet/bits.hpp"
#include "floquet/rng.hpp"

namespace floquet {

// Pauli operator in binary-symplectic form: i^phase * X^x Z^z.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n) : x_(n), z_(n) {}

  static PauliString identity(std::size_t n) { return PauliString(n); }
  static PauliString single(std::size_t n, std::size_t q, char pauli);

  std::size_t num_qubits() const { return x_.size(); }

  bool x(std::size_t q) const { return x_.get(q); }
  bool z(std::size_t q) const { return z_.get(q); }
  const BitVec& xmask() const { return x_; }
  const BitVec& zmask() const { return z_; }
  int phase_exponent() const { return phase_; }  // power of i

  void set_x(std::size_t q, bool v) { x_.set(q, v); }
  void set_z(std::size_t q, bool v) { z_.set(q, v); }

  // Multiply this *= other (left-to-right product this . other).
  PauliString& operator*=(const PauliString& o);
  friend PauliString operator*(PauliString a, const PauliString& b) {
    return a *= b;
  }

  bool commutes(const PauliString& o) const {
    return !(x_.and_parity(o.z_) ^ z_.and_parity(o.x_));
  }

  std::size_t weight() const {
    BitVec u = x_;
    u |= z_;
    return u.popcount();
  }

  bool is_identity_mask() const { return x_.empty_bits() && z_.empty_bits(); }
  bool is_identity() const { return is_identity_mask() && phase_ == 0; }

  // True when the operator is Hermitian (phase compatible with its Y count).
  bool is_hermitian() const {
    return ((phase_ - int(x_.and_count(z_))) % 2 + 2) % 2 == 0;
  }
  // For Hermitian operators: +1 or -1 relative to the canonical form with
  // letters I, X, Y, Z.
  int sign() const;
  void negate() { phase_ = (phase_ + 2) % 4; }
  void clear_phase_to_hermitian();

  bool operator==(const PauliString& o) const {
    return phase_ == o.phase_ && x_ == o.x_ && z_ == o.z_;
  }
  bool same_mask(const PauliString& o) const {
    return x_ == o.x_ && z_ == o.z_;
  }

  std::string to_string() const;
  static PauliString from_string(const std::string& s);

 private:
  BitVec x_, z_;
  int phase_ = 0;  // exponent of i, mod 4
};

enum class OutcomePolicy { Random, ForcePlus, ForceMinus };

struct MeasureResult {
  bool outcome;        // false => +1, true => -1
  bool deterministic;  // value was fixed by the current group
};

// Stabilizer group of a (possibly mixed) state, with tracked logical
// operators. Generators are Hermitian Pauli strings with signs.
class StabilizerTableau {
 public:
  explicit StabilizerTableau(std::size_t n) : n_(n) {}

  std::size_t num_qubits() const { return n_; }
  std::size_t rank() const { return gens_.size(); }
  std::size_t logical_qubits() const { return n_ - gens_.size(); }

  const std::vector<PauliString>& generators() const { return gens_; }

  void track_logical(const std::string& label, const PauliString& op);
  const std::vector<std::pair<std::string, PauliString>>& tracked() const {
    return tracked_;
  }
  PauliString& tracked_op(std::size_t idx) { return tracked_[idx].second; }

  MeasureResult measure(const PauliString& op, OutcomePolicy policy, Rng* rng);

  // Mask-level membership: is op in the group generated by the stabilizers,
  // ignoring signs?
  bool contains_unsigned(const PauliString& op) const;
  // Signed membership: returns the sign if op (or -op) is in the group.
  std::optional<int> contained_sign(const PauliString& op) const;

  StabilizerTableau clone() const { return *this; }

 private:
  std::size_t n_;
  std::vector<PauliString> gens_;
  std::vector<std::pair<std::string, PauliString>> tracked_;
};

}  // namespace floquet
