// cyclic.hpp
// Cyclic-orbit (necklace) basis for states invariant under cyclic
// permutation of party labels, plus relabeling permutations, Dicke
// states and the interleaved product construction.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "csent/tensor.hpp"

namespace csent {

// One equivalence class of n-bit strings under rotation. The
// representative is the lexicographically smallest rotation; orbit_size
// is the number of distinct rotations.
struct Necklace {
    int n = 0;
    unsigned rep = 0;   // representative bits, qubit 0 = MSB
    int orbit_size = 0;

    std::string rep_string() const;
    int weight() const;
    // Distinct members, ascending.
    std::vector<unsigned> members() const;
};

// Complete orbit list for n-bit strings, ordered by representative.
// even_only keeps orbits of even Hamming weight (the CSX subspace).
std::vector<Necklace> necklaces(int n, bool even_only = false);

// Cyclically symmetric pure state: one amplitude per necklace of length n.
class CSState {
public:
    // Amplitudes aligned with necklaces(n); must be unit norm (1e-12).
    CSState(int n, std::vector<cplx> amps);

    static CSState normalized(int n, std::vector<cplx> amps);

    int num_qubits() const { return n_; }
    const std::vector<Necklace>& orbits() const;
    const std::vector<cplx>& amplitudes() const { return amps_; }
    cplx amplitude(const std::string& representative) const;

    // Supported only on even-weight orbits?
    bool is_csx(double tol = 0.0) const;

    std::string to_json() const;
    static CSState from_json(const std::string& text);

private:
    int n_;
    std::vector<cplx> amps_;
};

// Party relabeling i -> m*i mod n; requires gcd(m, n) = 1.
struct Relabeling {
    int n = 0;
    int m = 1;

    Relabeling(int n, int m);
    int apply(int party) const { return static_cast<int>((static_cast<long>(m) * party) % n); }
};

// Expand orbit amplitudes into the full computational basis: each orbit
// member receives amplitude / sqrt(orbit_size).
StateVector embed(const CSState& state);

// Orbit-average projection, inverse to embed on cyclically invariant
// input. Returns the normalized projection and the norm of the
// non-cyclic residual; throws if the cyclic component vanishes.
std::pair<CSState, double> project_cs(const StateVector& vector);

// Permute party labels of a CS state by r; output is again cyclically
// invariant. Spacing-k concurrence of the input reappears at spacing
// m*k mod n in the output.
CSState relabel(const CSState& state, const Relabeling& r);

// Symmetric Dicke state with j excitations, in the orbit basis.
CSState dicke(int n, int j);

// k interleaved copies of the adjacent-concurrence maximizer on n/k
// qubits (Bell for n/k = 2, W for n/k = 3), parties k*{0..n/k-1}+i.
CSState theorem1_product(int n, int k);

}  // namespace csent
