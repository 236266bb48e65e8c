// cyclic.cpp

#include "csent/cyclic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace csent {

namespace {

// Rotate party labels by one step: party i's bit moves to party i+1 mod n.
unsigned rotate_once(unsigned bits, int n) {
    // Party i is bit (n-1-i); the shift i -> i+1 is a right rotation.
    unsigned mask = (1u << n) - 1u;
    return ((bits >> 1) | (bits << (n - 1))) & mask;
}

int popcount(unsigned x) {
    int c = 0;
    for (; x; x &= x - 1) ++c;
    return c;
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

const std::vector<Necklace>& orbit_table(int n) {
    static std::map<int, std::vector<Necklace>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, necklaces(n)).first;
    return it->second;
}

}  // namespace

std::string Necklace::rep_string() const {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
        if (rep >> (n - 1 - i) & 1) s[i] = '1';
    return s;
}

int Necklace::weight() const { return popcount(rep); }

std::vector<unsigned> Necklace::members() const {
    std::vector<unsigned> out;
    unsigned b = rep;
    do {
        out.push_back(b);
        b = rotate_once(b, n);
    } while (b != rep);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Necklace> necklaces(int n, bool even_only) {
    if (n < 1 || n > kMaxQubits) throw std::invalid_argument("necklaces: n out of range");
    std::vector<Necklace> out;
    for (unsigned bits = 0; bits < (1u << n); ++bits) {
        unsigned mn = bits;
        int size = 1;
        unsigned b = rotate_once(bits, n);
        while (b != bits) {
            mn = std::min(mn, b);
            ++size;
            b = rotate_once(b, n);
        }
        if (mn != bits) continue;  // not the minimal rotation
        if (even_only && popcount(bits) % 2 != 0) continue;
        out.push_back(Necklace{n, bits, size});
    }
    return out;
}

CSState::CSState(int n, std::vector<cplx> amps) : n_(n), amps_(std::move(amps)) {
    const auto& orbs = orbit_table(n);  // validates n
    if (amps_.size() != orbs.size())
        throw std::invalid_argument("CSState: amplitude count != necklace count");
    double s = 0.0;
    for (const cplx& z : amps_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument("CSState: non-finite amplitude");
        s += std::norm(z);
    }
    if (std::abs(std::sqrt(s) - 1.0) > 1e-12)
        throw std::invalid_argument("CSState: not unit norm");
}

CSState CSState::normalized(int n, std::vector<cplx> amps) {
    double s = 0.0;
    for (const cplx& z : amps) s += std::norm(z);
    if (s <= 0.0) throw std::invalid_argument("CSState::normalized: zero vector");
    double inv = 1.0 / std::sqrt(s);
    for (cplx& z : amps) z *= inv;
    return CSState(n, std::move(amps));
}

const std::vector<Necklace>& CSState::orbits() const { return orbit_table(n_); }

cplx CSState::amplitude(const std::string& representative) const {
    const auto& orbs = orbits();
    for (std::size_t i = 0; i < orbs.size(); ++i)
        if (orbs[i].rep_string() == representative) return amps_[i];
    throw std::invalid_argument("CSState: unknown orbit representative " + representative);
}

bool CSState::is_csx(double tol) const {
    const auto& orbs = orbits();
    for (std::size_t i = 0; i < orbs.size(); ++i)
        if (orbs[i].weight() % 2 != 0 && std::abs(amps_[i]) > tol) return false;
    return true;
}

std::string CSState::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    j["orbits"] = nlohmann::json::array();
    const auto& orbs = orbits();
    for (std::size_t i = 0; i < orbs.size(); ++i) {
        j["orbits"].push_back({{"rep", orbs[i].rep_string()},
                               {"re", amps_[i].real()},
                               {"im", amps_[i].imag()}});
    }
    return j.dump();
}

CSState CSState::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    const auto& orbs = orbit_table(n);
    std::vector<cplx> amps(orbs.size(), cplx{});
    for (const auto& o : j.at("orbits")) {
        std::string rep = o.at("rep").get<std::string>();
        cplx z{o.at("re").get<double>(), o.at("im").get<double>()};
        bool found = false;
        for (std::size_t i = 0; i < orbs.size(); ++i)
            if (orbs[i].rep_string() == rep) {
                amps[i] = z;
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("CSState::from_json: unknown orbit " + rep);
    }
    return CSState(n, std::move(amps));
}

Relabeling::Relabeling(int n, int m) : n(n), m(m) {
    if (n < 1 || n > kMaxQubits) throw std::invalid_argument("Relabeling: n out of range");
    if (m < 1 || std::gcd(m, n) != 1)
        throw std::invalid_argument("Relabeling: multiplier not invertible mod n");
}

StateVector embed(const CSState& state) {
    const int n = state.num_qubits();
    std::vector<cplx> v(std::size_t{1} << n, cplx{});
    const auto& orbs = state.orbits();
    for (std::size_t i = 0; i < orbs.size(); ++i) {
        cplx w = state.amplitudes()[i] / std::sqrt(static_cast<double>(orbs[i].orbit_size));
        for (unsigned member : orbs[i].members()) v[member] += w;
    }
    return StateVector(n, std::move(v));
}

std::pair<CSState, double> project_cs(const StateVector& vector) {
    const int n = vector.num_qubits;
    const auto& orbs = orbit_table(n);
    std::vector<cplx> amps(orbs.size());
    std::vector<cplx> cyc(vector.dim(), cplx{});
    for (std::size_t i = 0; i < orbs.size(); ++i) {
        cplx s = 0.0;
        for (unsigned member : orbs[i].members()) s += vector.amplitudes[member];
        double inv_root = 1.0 / std::sqrt(static_cast<double>(orbs[i].orbit_size));
        amps[i] = s * inv_root;
        cplx w = amps[i] * inv_root;
        for (unsigned member : orbs[i].members()) cyc[member] = w;
    }
    double resid2 = 0.0;
    for (std::size_t x = 0; x < vector.dim(); ++x) resid2 += std::norm(vector.amplitudes[x] - cyc[x]);
    return {CSState::normalized(n, std::move(amps)), std::sqrt(std::max(0.0, resid2))};
}

CSState relabel(const CSState& state, const Relabeling& r) {
    if (r.n != state.num_qubits()) throw std::invalid_argument("relabel: qubit count mismatch");
    const int n = r.n;
    StateVector v = embed(state);
    std::vector<cplx> out(v.dim(), cplx{});
    for (std::size_t x = 0; x < v.dim(); ++x) {
        std::size_t y = 0;
        for (int i = 0; i < n; ++i)
            if (x >> (n - 1 - i) & 1) y |= std::size_t{1} << (n - 1 - r.apply(i));
        out[y] = v.amplitudes[x];
    }
    auto [cs, resid] = project_cs(StateVector(n, std::move(out)));
    if (resid > 1e-10) throw std::logic_error("relabel: output lost cyclic invariance");
    return cs;
}

CSState dicke(int n, int j) {
    if (j < 0 || j > n) throw std::invalid_argument("dicke: excitation count out of range");
    const auto& orbs = orbit_table(n);
    std::vector<cplx> amps(orbs.size(), cplx{});
    double inv_root = 1.0 / std::sqrt(binomial(n, j));
    for (std::size_t i = 0; i < orbs.size(); ++i)
        if (orbs[i].weight() == j)
            amps[i] = std::sqrt(static_cast<double>(orbs[i].orbit_size)) * inv_root;
    return CSState(n, std::move(amps));
}

CSState theorem1_product(int n, int k) {
    if (n < 2 || n > kMaxQubits) throw std::invalid_argument("theorem1_product: n out of range");
    if (k < 1 || n % k != 0) throw std::invalid_argument("theorem1_product: k does not divide n");
    const int m = n / k;
    std::vector<double> base;  // adjacent-concurrence maximizer on m qubits
    if (m == 2) {
        base = {1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0)};
    } else if (m == 3) {
        double w = 1.0 / std::sqrt(3.0);
        base = {0.0, w, w, 0.0, w, 0.0, 0.0, 0.0};
    } else {
        throw std::invalid_argument("theorem1_product: no known maximizer for n/k > 3");
    }

    std::vector<cplx> v(std::size_t{1} << n);
    for (std::size_t x = 0; x < v.size(); ++x) {
        double amp = 1.0;
        for (int i = 0; i < k && amp != 0.0; ++i) {
            std::size_t sub = 0;
            for (int t = 0; t < m; ++t) {
                int party = k * t + i;
                if (x >> (n - 1 - party) & 1) sub |= std::size_t{1} << (m - 1 - t);
            }
            amp *= base[sub];
        }
        v[x] = amp;
    }
    auto [cs, resid] = project_cs(StateVector(n, std::move(v)));
    if (resid > 1e-12) throw std::logic_error("theorem1_product: construction not cyclically invariant");
    return cs;
}

}  // namespace csent
