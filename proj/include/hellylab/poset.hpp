#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hellylab/bitset.hpp"

namespace hellylab {

// Finite poset stored as a Hasse diagram plus its reflexive-transitive
// closure. Construction rejects cycles.
class Poset {
public:
    static Poset from_hasse(std::vector<std::string> elements,
                            const std::vector<std::pair<int, int>>& less_than);

    int size() const { return n_; }
    const std::vector<std::string>& elements() const { return names_; }
    bool leq(int a, int b) const { return leq_[a].test(b); }
    bool less(int a, int b) const { return a != b && leq(a, b); }
    const std::vector<std::pair<int, int>>& hasse() const { return hasse_; }

    // All maximal chains between comparable pairs have equal length.
    bool graded() const { return graded_; }

    Poset reversed() const;

private:
    int n_ = 0;
    std::vector<std::string> names_;
    std::vector<Bits> leq_;  // leq_[a].test(b) iff a <= b
    std::vector<std::pair<int, int>> hasse_;
    bool graded_ = true;
};

struct Bowtie {
    int a, b, c, d;  // a,b <= c,d with a||b, c||d and nothing strictly between
};

struct FlagFailure {
    int base;                      // the x with P_{>=x} / P_{<=x} failing
    enum class Kind { PairWithoutMeet, PairWithoutJoin, TripleWithoutBound } kind;
    std::vector<int> tuple;        // the failing pair or triple
};

struct PosetReport {
    std::vector<Bowtie> bowties;
    bool is_lattice = true;
    std::optional<std::pair<int, int>> lattice_failure;  // pair without meet or join
    std::vector<FlagFailure> up_flag_failures;           // P_{>=x} not a flag meet-semilattice
    std::vector<FlagFailure> down_flag_failures;         // P_{<=x} not a flag join-semilattice
    bool graded = true;
};

PosetReport poset_check(const Poset& p);

struct ChainComplex {
    std::vector<std::vector<int>> simplices;  // chains listed in increasing order
    std::vector<long> f_vector;               // f_vector[k] = number of k-simplices
};

// All chains of the poset as ordered simplices (no metric realization).
ChainComplex orthoscheme_chains(const Poset& p, size_t cap = 5000000);

}  // namespace hellylab
