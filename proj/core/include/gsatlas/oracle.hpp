#pragma once

#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include "gsatlas/graph.hpp"
#include "gsatlas/invariants.hpp"

namespace gsatlas {

inline constexpr int oracle_max_qubits = 12;
inline constexpr double stabilizer_tolerance = 1e-10;
inline constexpr double singular_value_threshold = 1e-9;

// Dense n-qubit state, amplitudes indexed by basis bitstring (qubit q = bit q).
struct StateVector {
  int n = 0;
  std::vector<std::complex<double>> amp;

  double norm() const;
};

// Tensor product of single-qubit Paulis with a global phase in {1, i, -1, -i}.
// Stored in X^x Z^z form; Y contributes the i of Y = iXZ to the internal
// phase, so letter() and phase() recover the conventional reading.
class PauliString {
 public:
  enum class Letter : uint8_t { I, X, Y, Z };

  PauliString() = default;
  explicit PauliString(int n) : n_(n) {}
  // e.g. from_letters(3, "XZY"); phase_i_power adds a global factor i^k.
  static PauliString from_letters(std::string_view letters, int phase_i_power = 0);

  int size() const { return n_; }
  Letter letter(int q) const;
  // Exponent k of the global phase i^k relative to the plain letter product.
  int phase_power() const;
  std::complex<double> phase() const;

  PauliString operator*(const PauliString& rhs) const;
  bool operator==(const PauliString&) const = default;

  StateVector apply(const StateVector& psi) const;

 private:
  int n_ = 0;
  uint32_t x_ = 0;
  uint32_t z_ = 0;
  int phase_pow_ = 0;  // operator = i^phase_pow_ * X^x Z^z

  friend PauliString stabilizer_generator(const Graph& g, int vertex);
  friend PauliString lc_conjugate(const PauliString& p, int vertex, uint32_t neighborhood);
};

// |G> = prod_{(i,j) in E} CZ_ij |+>^n; amplitudes are +-2^{-n/2}.
StateVector build_state(const Graph& g);

// X on the vertex, Z on its neighborhood.
PauliString stabilizer_generator(const Graph& g, int vertex);

// Image of p under local complementation at `vertex`: on the vertex itself
// Y -> Z, Z -> -Y; on its neighborhood X -> -Y, Y -> X.
PauliString lc_conjugate(const PauliString& p, int vertex, uint32_t neighborhood);

// True iff every generator fixes build_state(g) within stabilizer_tolerance.
bool check_stabilizer(const Graph& g);

// log2 of the number of singular values above threshold in the bipartite
// amplitude matrix; the count must be a power of two (flat graph-state
// spectra), else ConsistencyError.
int oracle_schmidt_rank(const Graph& g, Bipartition bp);

// Schmidt ranks for every canonical bipartition, aligned with
// all_bipartitions(psi.n).
std::vector<int> oracle_rank_profile(const StateVector& psi);

// Transforms each generator by the quoted letter map and checks it
// stabilizes the locally complemented state.
bool check_lc_stabilizer_map(const Graph& g, int vertex);

// Projects onto the +1 eigenspace of the measured Pauli (falling back to -1
// on a zero-probability branch), discards the qubit, and compares the full
// bipartite rank profile against the graph produced by pauli_measure; the X
// case accepts any admissible neighbor choice.
bool check_measurement_rule(const Graph& g, int vertex, PauliBasis basis);

}  // namespace gsatlas
