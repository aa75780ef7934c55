#ifndef PQEULER_MAPS_HPP
#define PQEULER_MAPS_HPP

#include <stdexcept>
#include <vector>

#include <json.hpp>

#include <pqeuler/lattice.hpp>
#include <pqeuler/permutation.hpp>

namespace pqeuler
{

class PreconditionError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Falling alternating permutation of odd length 2n+1 to a diagramme of
// length 2n: k is an up step when sigma^{-1}(k) is even, a down step
// otherwise, and xi_k = toht_k.
DyckDiagramme fv(const Permutation &sigma);

// Falling alternating permutation of even length 2n: append 2n+1, then fv.
// The result is a restricted diagramme.
DyckDiagramme fv_star(const Permutation &sigma);

// Laguerre history from the cyclic type of each k, with xi from cros_k.
LaguerreHistory fz(const Permutation &sigma);

// The intermediate biwords of csz. Words hold letters; emb[k-1] is the right
// embracing number of the letter k.
struct CszTrace {
    std::vector<int> f, f_prime, g, g_prime;
    std::vector<int> emb;

    nlohmann::json to_json() const;
};

Permutation csz(const Permutation &sigma, CszTrace *trace = nullptr);

// Sign-reversing involution on S_n (sigma_0 = sigma_{n+1} = 0).
Permutation invol_phi(const Permutation &sigma);

// Sign-reversing involution on coderangements (sigma_0 = 0, sigma_{n+1} = n+1).
// Throws PreconditionError for other inputs.
Permutation invol_psi(const Permutation &sigma);

} // namespace pqeuler

#endif
