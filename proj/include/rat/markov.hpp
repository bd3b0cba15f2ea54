#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rat/algebra.hpp"
#include "rat/diagram.hpp"
#include "rat/kernels.hpp"
#include "rat/limits.hpp"

namespace rat {

class BadParams : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Hopping rates: 0 < alpha <= 1, 0 < beta <= 1, 0 <= q <= 1.
struct ChainParams {
    Rational alpha = 1;
    Rational beta = 1;
    Rational q = 1;

    void validate() const;  // throws BadParams
    Binding binding() const { return Binding(alpha, beta, q); }
};

/// Discrete-time two-species PASEP on n sites with r light particles. Each allowed
/// move with rate u has probability u/(n+1); the diagonal absorbs the rest.
struct ChainSpec {
    std::size_t n = 0;
    std::size_t r = 0;
    ChainParams params;
    std::vector<Word> states;
    RationalMatrix P;

    std::size_t index_of(const Word& w) const;
};

/// Words of length n with r A's, lexicographic with D < A < E.
std::vector<Word> state_space(std::size_t n, std::size_t r);

ChainSpec build_chain(std::size_t n, std::size_t r, const ChainParams& params);

/// Exact solution of pi P = pi with sum(pi) = 1.
std::vector<Rational> stationary_distribution(const ChainSpec& c);

struct StateComparison {
    Word state;
    Rational stationary;  // from the chain
    Rational predicted;   // weight(W) / Z_{n,r}
    bool match = false;
};

struct MainTheoremReport {
    std::size_t n = 0;
    std::size_t r = 0;
    ChainParams params;
    Polynomial partition;
    std::vector<StateComparison> states;

    bool ok() const;
    std::size_t mismatches() const;
};

MainTheoremReport verify_main_theorem(std::size_t n, std::size_t r, const ChainParams& params,
                                      const Limits& limits = {});

/// Weights of words, computed once per word. The empty word has weight 1.
class WeightCache {
public:
    explicit WeightCache(Limits limits = {}) : limits_(limits) {}
    const Polynomial& operator()(const Word& w);

private:
    Limits limits_;
    std::map<Word, Polynomial> cache_;
};

enum class AnsatzIdentity : std::uint8_t {
    DE,     // weight(XDEY) = ab (weight(XDY) + weight(XEY)) + q weight(XEDY)
    DA,     // weight(XDAY) = ab weight(XAY) + q weight(XADY)
    AE,     // weight(XAEY) = ab weight(XAY) + q weight(XEAY)
    RightD, // weight(XD) = a weight(X)
    LeftE,  // weight(EY) = b weight(Y)
};

const char* ansatz_identity_name(AnsatzIdentity id);

struct AnsatzResult {
    AnsatzIdentity identity;
    std::size_t checked = 0;
    std::vector<std::string> failures;  // "X|Y" for each failing decomposition
};

struct AnsatzReport {
    std::size_t max_n = 0;
    std::vector<AnsatzResult> identities;
    bool ok() const;
};

/// Checks the five identities for every X, Y whose combined word has length <= max_n.
AnsatzReport verify_ansatz_identities(std::size_t max_n, const Limits& limits = {});

}  // namespace rat
