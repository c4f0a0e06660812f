#include "floquet/pauli.hpp"

#include <stdexcept>

namespace floquet {

PauliString PauliString::single(std::size_t n, std::size_t q, char pauli) {
  PauliString p(n);
  switch (pauli) {
    case 'I':
      break;
    case 'X':
      p.x_.set(q);
      break;
    case 'Z':
      p.z_.set(q);
      break;
    case 'Y':
      p.x_.set(q);
      p.z_.set(q);
      p.phase_ = 1;  // Y = i XZ
      break;
    default:
      throw std::invalid_argument("unknown Pauli letter");
  }
  return p;
}

PauliString& PauliString::operator*=(const PauliString& o) {
  if (num_qubits() != o.num_qubits())
    throw std::invalid_argument("Pauli size mismatch");
  // (i^a X^x1 Z^z1)(i^b X^x2 Z^z2) = i^{a+b} (-1)^{|z1 & x2|} X^... Z^...
  int ph = phase_ + o.phase_ + 2 * int(z_.and_parity(o.x_));
  x_ ^= o.x_;
  z_ ^= o.z_;
  phase_ = ((ph % 4) + 4) % 4;
  return *this;
}

int PauliString::sign() const {
  int rel = ((phase_ - int(x_.and_count(z_))) % 4 + 4) % 4;
  if (rel == 0) return +1;
  if (rel == 2) return -1;
  throw std::logic_error("sign() on a non-Hermitian Pauli");
}

void PauliString::clear_phase_to_hermitian() {
  phase_ = int(x_.and_count(z_) % 4);
}

std::string PauliString::to_string() const {
  int rel = ((phase_ - int(x_.and_count(z_))) % 4 + 4) % 4;
  static const char* pre[4] = {"+", "+i", "-", "-i"};
  std::string s = pre[rel];
  for (std::size_t q = 0; q < num_qubits(); ++q) {
    int code = int(x(q)) | (int(z(q)) << 1);
    s += "IXZY"[code];
  }
  return s;
}

PauliString PauliString::from_string(const std::string& s) {
  std::size_t pos = 0;
  int rel = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    rel = s[pos] == '-' ? 2 : 0;
    ++pos;
    if (pos < s.size() && s[pos] == 'i') {
      rel += 1;
      ++pos;
    }
  }
  PauliString p(s.size() - pos);
  for (std::size_t q = 0; pos < s.size(); ++q, ++pos) {
    switch (s[pos]) {
      case 'I':
        break;
      case 'X':
        p.x_.set(q);
        break;
      case 'Z':
        p.z_.set(q);
        break;
      case 'Y':
        p.x_.set(q);
        p.z_.set(q);
        break;
      default:
        throw std::invalid_argument("unknown Pauli letter in string");
    }
  }
  p.phase_ = int((p.x_.and_count(p.z_) + std::size_t(rel)) % 4);
  return p;
}

void StabilizerTableau::track_logical(const std::string& label,
                                      const PauliString& op) {
  for (const auto& g : gens_)
    if (!g.commutes(op))
      throw std::invalid_argument("tracked logical anticommutes with group");
  tracked_.emplace_back(label, op);
}

namespace {

// Row-reduce the generator masks and, when target is given, try to express
// it as a product; returns the product Pauli (with phase) on success.
std::optional<PauliString> express_in_group(
    const std::vector<PauliString>& gens, const PauliString& target) {
  std::vector<PauliString> rows = gens;
  PauliString acc = PauliString::identity(target.num_qubits());
  BitVec want_x = target.xmask(), want_z = target.zmask();
  std::size_t n = target.num_qubits();
  // Work on combined 2n-bit masks via repeated pivoting.
  std::vector<bool> used(rows.size(), false);
  BitVec cx = acc.xmask(), cz = acc.zmask();
  for (std::size_t bit = 0; bit < 2 * n; ++bit) {
    bool want = bit < n ? want_x.get(bit) : want_z.get(bit - n);
    bool have = bit < n ? cx.get(bit) : cz.get(bit - n);
    if (want == have) continue;
    // Find an unused row with a 1 at this bit whose earlier bits are clear
    // relative to the current difference -- do simple elimination instead:
    bool found = false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r]) continue;
      bool rb = bit < n ? rows[r].xmask().get(bit) : rows[r].zmask().get(bit - n);
      if (!rb) continue;
      // Eliminate this bit from all other unused rows.
      for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
        if (r2 == r || used[r2]) continue;
        bool b2 =
            bit < n ? rows[r2].xmask().get(bit) : rows[r2].zmask().get(bit - n);
        if (b2) rows[r2] *= rows[r];
      }
      acc *= rows[r];
      cx = acc.xmask();
      cz = acc.zmask();
      used[r] = true;
      found = true;
      break;
    }
    if (!found) return std::nullopt;
  }
  if (!acc.same_mask(target)) return std::nullopt;
  return acc;
}

}  // namespace

bool StabilizerTableau::contains_unsigned(const PauliString& op) const {
  auto r = express_in_group(gens_, op);
  return r.has_value();
}

std::optional<int> StabilizerTableau::contained_sign(
    const PauliString& op) const {
  auto r = express_in_group(gens_, op);
  if (!r) return std::nullopt;
  int rel = ((r->phase_exponent() - op.phase_exponent()) % 4 + 4) % 4;
  if (rel == 0) return +1;
  if (rel == 2) return -1;
  throw std::logic_error("group member differs from target by i");
}

MeasureResult StabilizerTableau::measure(const PauliString& op,
                                         OutcomePolicy policy, Rng* rng) {
  if (op.num_qubits() != n_)
    throw std::invalid_argument("measurement size mismatch");
  if (!op.is_hermitian())
    throw std::invalid_argument("measured operator must be Hermitian");

  int pivot = -1;
  for (std::size_t g = 0; g < gens_.size(); ++g)
    if (!gens_[g].commutes(op)) {
      pivot = int(g);
      break;
    }

  if (pivot < 0) {
    auto sign = contained_sign(op);
    if (sign) {
      bool outcome = *sign < 0;
      bool forced_conflict =
          (policy == OutcomePolicy::ForcePlus && outcome) ||
          (policy == OutcomePolicy::ForceMinus && !outcome);
      if (forced_conflict)
        throw std::runtime_error("forced outcome contradicts group value");
      return {outcome, true};
    }
    // Independent commuting operator: random outcome, group grows.
    for (auto& [label, l] : tracked_)
      if (!l.commutes(op))
        throw std::runtime_error("tracked logical '" + label +
                                 "' destroyed by measurement");
    bool outcome;
    switch (policy) {
      case OutcomePolicy::ForcePlus:
        outcome = false;
        break;
      case OutcomePolicy::ForceMinus:
        outcome = true;
        break;
      default:
        outcome = rng->next() & 1;
    }
    PauliString g = op;
    g.clear_phase_to_hermitian();
    if (outcome) g.negate();
    gens_.push_back(g);
    return {outcome, false};
  }

  // Repair all other anticommuting generators and tracked logicals. The
  // product of two signed Hermitian stabilizers stays Hermitian; its phase
  // carries the sign, so it must not be normalized away.
  PauliString repair = gens_[std::size_t(pivot)];
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    if (int(g) == pivot) continue;
    if (!gens_[g].commutes(op)) gens_[g] *= repair;
  }
  for (auto& [label, l] : tracked_)
    if (!l.commutes(op)) l *= repair;

  bool outcome;
  switch (policy) {
    case OutcomePolicy::ForcePlus:
      outcome = false;
      break;
    case OutcomePolicy::ForceMinus:
      outcome = true;
      break;
    default:
      outcome = rng->next() & 1;
  }
  PauliString g = op;
  g.clear_phase_to_hermitian();
  if (outcome) g.negate();
  gens_[std::size_t(pivot)] = g;
  return {outcome, false};
}

}  // namespace floquet
