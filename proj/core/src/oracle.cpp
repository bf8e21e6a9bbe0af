#include "gsatlas/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "gsatlas/errors.hpp"

namespace gsatlas {

namespace {

constexpr std::complex<double> i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

void check_oracle_size(int n) {
  if (n < 1 || n > oracle_max_qubits)
    throw std::invalid_argument("oracle: qubit count out of range [1," +
                                std::to_string(oracle_max_qubits) + "]");
}

}  // namespace

double StateVector::norm() const {
  double s = 0;
  for (const auto& a : amp) s += std::norm(a);
  return std::sqrt(s);
}

PauliString PauliString::from_letters(std::string_view letters, int phase_i_power) {
  PauliString p(static_cast<int>(letters.size()));
  p.phase_pow_ = phase_i_power;
  for (size_t q = 0; q < letters.size(); ++q) {
    switch (letters[q]) {
      case 'I': break;
      case 'X': p.x_ |= 1u << q; break;
      case 'Z': p.z_ |= 1u << q; break;
      case 'Y':
        p.x_ |= 1u << q;
        p.z_ |= 1u << q;
        p.phase_pow_ += 1;  // Y = i X Z
        break;
      default: throw std::invalid_argument("pauli string: letters must be I, X, Y or Z");
    }
  }
  p.phase_pow_ = ((p.phase_pow_ % 4) + 4) % 4;
  return p;
}

PauliString::Letter PauliString::letter(int q) const {
  if (q < 0 || q >= n_) throw std::out_of_range("pauli string: qubit out of range");
  bool x = (x_ >> q) & 1u;
  bool z = (z_ >> q) & 1u;
  if (x && z) return Letter::Y;
  if (x) return Letter::X;
  if (z) return Letter::Z;
  return Letter::I;
}

int PauliString::phase_power() const {
  int y_count = std::popcount(x_ & z_);
  return ((phase_pow_ - y_count) % 4 + 4) % 4;
}

std::complex<double> PauliString::phase() const { return i_power(phase_power()); }

PauliString PauliString::operator*(const PauliString& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("pauli string: size mismatch");
  PauliString out(n_);
  // X^x1 Z^z1 X^x2 Z^z2 = (-1)^{|z1 & x2|} X^{x1^x2} Z^{z1^z2}
  out.phase_pow_ = (phase_pow_ + rhs.phase_pow_ + 2 * std::popcount(z_ & rhs.x_)) % 4;
  out.x_ = x_ ^ rhs.x_;
  out.z_ = z_ ^ rhs.z_;
  return out;
}

StateVector PauliString::apply(const StateVector& psi) const {
  if (psi.n != n_) throw std::invalid_argument("pauli string: state size mismatch");
  StateVector out;
  out.n = psi.n;
  out.amp.assign(psi.amp.size(), {0, 0});
  std::complex<double> global = i_power(phase_pow_);
  for (uint32_t b = 0; b < psi.amp.size(); ++b) {
    std::complex<double> c = global * psi.amp[b];
    if (std::popcount(z_ & b) & 1) c = -c;
    out.amp[b ^ x_] += c;
  }
  return out;
}

StateVector build_state(const Graph& g) {
  int n = g.size();
  check_oracle_size(n);
  StateVector psi;
  psi.n = n;
  psi.amp.assign(size_t{1} << n, {0, 0});
  double scale = std::pow(2.0, -n / 2.0);
  for (uint32_t x = 0; x < psi.amp.size(); ++x) {
    int sign = 0;
    for (uint32_t m = x; m;) {
      int i = std::countr_zero(m);
      m &= m - 1;
      sign += std::popcount(g.neighbors(i) & x & ~((2u << i) - 1u));
    }
    psi.amp[x] = (sign & 1) ? -scale : scale;
  }
  return psi;
}

PauliString stabilizer_generator(const Graph& g, int vertex) {
  uint32_t nb = g.neighbors(vertex);  // validates vertex
  PauliString p(g.size());
  p.x_ = 1u << vertex;
  p.z_ = nb;
  p.phase_pow_ = 0;
  return p;
}

PauliString lc_conjugate(const PauliString& p, int vertex, uint32_t neighborhood) {
  PauliString out(p.n_);
  int phase = p.phase_pow_;
  for (int q = 0; q < p.n_; ++q) {
    bool x = (p.x_ >> q) & 1u;
    bool z = (p.z_ >> q) & 1u;
    if (!x && !z) continue;
    if (x && z) phase -= 1;  // peel the implicit i of an input Y
    bool nx = x, nz = z;
    if (q == vertex) {
      if (x && z) { nx = false; nz = true; }             // Y -> Z
      else if (z) { nx = true; nz = true; phase += 2; }  // Z -> -Y
    } else if ((neighborhood >> q) & 1u) {
      if (x && z) { nx = true; nz = false; }             // Y -> X
      else if (x) { nx = true; nz = true; phase += 2; }  // X -> -Y
    }
    if (nx) out.x_ |= 1u << q;
    if (nz) out.z_ |= 1u << q;
    if (nx && nz) phase += 1;  // restore the i of an output Y
  }
  out.phase_pow_ = ((phase % 4) + 4) % 4;
  return out;
}

namespace {

bool stabilizes(const PauliString& p, const StateVector& psi) {
  StateVector out = p.apply(psi);
  double worst = 0;
  for (size_t i = 0; i < psi.amp.size(); ++i)
    worst = std::max(worst, std::abs(out.amp[i] - psi.amp[i]));
  return worst <= stabilizer_tolerance;
}

}  // namespace

bool check_stabilizer(const Graph& g) {
  StateVector psi = build_state(g);
  for (int i = 0; i < g.size(); ++i)
    if (!stabilizes(stabilizer_generator(g, i), psi)) return false;
  return true;
}

namespace {

int svd_rank_log2(const StateVector& psi, Bipartition bp) {
  int n = psi.n;
  uint32_t a_mask = bp.a_mask;
  uint32_t b_mask = ((1u << n) - 1) & ~a_mask;
  int a_bits = std::popcount(a_mask);
  int b_bits = n - a_bits;
  Eigen::MatrixXcd m(size_t{1} << a_bits, size_t{1} << b_bits);
  for (uint32_t x = 0; x < psi.amp.size(); ++x) {
    uint32_t a = 0, b = 0;
    int ai = 0, bi = 0;
    for (int q = 0; q < n; ++q) {
      if ((a_mask >> q) & 1u) a |= ((x >> q) & 1u) << ai++;
      else if ((b_mask >> q) & 1u) b |= ((x >> q) & 1u) << bi++;
    }
    m(a, b) = psi.amp[x];
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  int count = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > singular_value_threshold) ++count;
  if (count == 0 || (count & (count - 1)) != 0)
    throw ConsistencyError("oracle: Schmidt coefficient count " + std::to_string(count) +
                           " is not a power of two");
  return std::bit_width(static_cast<unsigned>(count)) - 1;
}

}  // namespace

int oracle_schmidt_rank(const Graph& g, Bipartition bp) {
  return svd_rank_log2(build_state(g), bp);
}

std::vector<int> oracle_rank_profile(const StateVector& psi) {
  std::vector<int> out;
  for (const Bipartition& bp : all_bipartitions(psi.n)) out.push_back(svd_rank_log2(psi, bp));
  return out;
}

bool check_lc_stabilizer_map(const Graph& g, int vertex) {
  uint32_t nb = g.neighbors(vertex);
  StateVector tau_psi = build_state(local_complement(g, vertex));
  for (int i = 0; i < g.size(); ++i) {
    PauliString mapped = lc_conjugate(stabilizer_generator(g, i), vertex, nb);
    if (!stabilizes(mapped, tau_psi)) return false;
  }
  return true;
}

namespace {

// <e|_v psi, with |e> the +1 (or -1) eigenvector of the measured Pauli.
StateVector project_and_discard(const StateVector& psi, int v, PauliBasis basis, bool plus) {
  std::complex<double> e0, e1;
  const double r = 1.0 / std::sqrt(2.0);
  switch (basis) {
    case PauliBasis::Z: e0 = plus ? 1 : 0; e1 = plus ? 0 : 1; break;
    case PauliBasis::X: e0 = r; e1 = plus ? r : -r; break;
    case PauliBasis::Y: e0 = r; e1 = (plus ? std::complex<double>(0, r) : std::complex<double>(0, -r)); break;
  }
  StateVector out;
  out.n = psi.n - 1;
  out.amp.assign(size_t{1} << out.n, {0, 0});
  for (uint32_t x = 0; x < psi.amp.size(); ++x) {
    uint32_t rest = (x & ((1u << v) - 1u)) | ((x >> (v + 1)) << v);
    std::complex<double> e = ((x >> v) & 1u) ? e1 : e0;
    out.amp[rest] += std::conj(e) * psi.amp[x];
  }
  return out;
}

}  // namespace

bool check_measurement_rule(const Graph& g, int vertex, PauliBasis basis) {
  if (g.size() > 8) throw std::invalid_argument("check_measurement_rule: supported for n <= 8");
  if (g.size() < 2) throw std::invalid_argument("check_measurement_rule: need at least 2 qubits");
  StateVector psi = build_state(g);
  StateVector post = project_and_discard(psi, vertex, basis, /*plus=*/true);
  double nrm = post.norm();
  if (nrm < 1e-12) {
    post = project_and_discard(psi, vertex, basis, /*plus=*/false);
    nrm = post.norm();
  }
  for (auto& a : post.amp) a /= nrm;
  std::vector<int> measured_profile = oracle_rank_profile(post);

  uint32_t nb = g.neighbors(vertex);
  if (basis != PauliBasis::X || nb == 0) {
    Graph ruled = pauli_measure(g, vertex, basis);
    return measured_profile == oracle_rank_profile(build_state(ruled));
  }
  for (uint32_t m = nb; m;) {
    int b0 = std::countr_zero(m);
    m &= m - 1;
    Graph ruled = pauli_measure(g, vertex, PauliBasis::X, b0);
    if (measured_profile == oracle_rank_profile(build_state(ruled))) return true;
  }
  return false;
}

}  // namespace gsatlas
