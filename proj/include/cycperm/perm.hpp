#ifndef CYCPERM_PERM_HPP
#define CYCPERM_PERM_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace cycperm {

// Permutation of [n] in one-line notation. word()[i] is the image of i+1.
class Permutation {
public:
    Permutation() = default;
    // Throws std::invalid_argument unless word is a bijection on 1..n.
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(word_.size()); }
    const std::vector<int>& word() const { return word_; }
    int image_of(int i) const { return word_[static_cast<std::size_t>(i) - 1]; }

    bool operator==(const Permutation&) const = default;

    // "64713258" for n <= 9, comma-separated otherwise. parse accepts both.
    std::string to_string() const;
    static Permutation parse(std::string_view text);

private:
    std::vector<int> word_;
};

// A written cycle decomposition: an ordered list of ordered cycles. The
// written order carries meaning: cyclic peak/valley counts are read off the
// form exactly as given, whether or not it is standard.
struct CycleForm {
    std::vector<std::vector<int>> cycles;
    int n = 0;

    bool operator==(const CycleForm&) const = default;
};

// Validates that the cycles partition [n]. Throws std::invalid_argument.
void validate(const CycleForm& c);

// True iff every cycle starts with its minimum and cycles appear in
// increasing order of their minima.
bool is_standard(const CycleForm& c);

// Standard cycle decomposition of p (each cycle minimum-first, cycles by
// increasing minima).
CycleForm cycle_form(const Permutation& p);

// The permutation a written cycle form represents.
Permutation permutation_of(const CycleForm& c);

// Rewrites c as the standard form of the same permutation.
CycleForm standardize(const CycleForm& c);

struct CycleStats {
    int cpk = 0;  // cyclic peaks: interior entries larger than both written neighbours
    int cval = 0; // cyclic valleys: interior entries smaller than both written neighbours
    int cyc = 0;  // number of cycles
    int fix = 0;  // number of 1-cycles
    bool operator==(const CycleStats&) const = default;
};

// Statistics of the written form as given. First and last entries of a cycle
// are never peaks or valleys.
CycleStats cycle_stats(const CycleForm& c);

struct LinearStats {
    int pk = 0;   // interior peaks
    int val = 0;  // interior valleys
    int lpk = 0;  // left peaks, with a virtual 0 prepended
    int runs = 0; // maximal monotone segments; 1 for n=1, 0 for n=0
    bool operator==(const LinearStats&) const = default;
};

LinearStats linear_stats(const Permutation& p);

// Within each cycle, replaces every entry by the order-reversing involution
// on that cycle's support, keeping positions. The result is a written form
// and is not restandardized; applying it twice returns the input, and it
// swaps cpk with cval.
CycleForm switching(const CycleForm& c);

// Concatenation of the cycles of a standard form, with the set of positions
// after which a cycle boundary falls (1-based; the end of the word is not a
// boundary).
struct Flattened {
    std::vector<int> word;
    std::vector<int> boundaries;
};

// Throws std::invalid_argument if c is not standard.
Flattened flatten(const CycleForm& c);

// A vincular pattern in dash notation: letters without a dash between them
// must sit in adjacent positions of the host word.
struct Pattern {
    std::vector<int> letters;
    std::vector<bool> adjacent; // adjacent[i]: letters i and i+1 must be adjacent

    // "13-2": letters 1,3,2; the pair (1,3) adjacent, 2 free. No dash at all
    // means every consecutive pair is adjacent. Throws std::invalid_argument.
    static Pattern parse(std::string_view text);
};

// Number of occurrences of pat in flatten(c): index tuples increasing in
// position and order-isomorphic to the pattern, where each dash-free
// adjacency holds in the flattened word and does not straddle a cycle
// boundary.
//
// Note: this counts on the flattened cycle form, not on one-line notation.
// For (1)(2,4,5)(3) and the pattern "13-2" it yields 1; counting in the
// one-line word 14352 would yield 2. Patterns of length up to 4 are
// supported.
long long cyclic_pattern_count(const CycleForm& c, const Pattern& pat);

// For a single cycle (1, a_1, ..., a_n) on [n+1], the permutation
// b_1...b_n with b_i = a_i - 1. Throws std::invalid_argument unless c is one
// cycle written starting at 1.
Permutation unwrap_circular(const CycleForm& c);

// Hard cap on exhaustive enumeration; above it the work no longer finishes
// in reasonable time. Exceeding it throws std::length_error.
inline constexpr int kEnumerationCap = 12;

// Calls fn with each permutation word of [n] exactly once, in lexicographic
// order. n = 0 yields one empty word.
void for_each_permutation(int n, const std::function<void(const std::vector<int>&)>& fn);

// Same, restricted to words whose first entry is `first` (n >= 1).
void for_each_permutation_with_first(int n, int first,
                                     const std::function<void(const std::vector<int>&)>& fn);

// Streaming enumeration of S_n in lexicographic order.
class PermutationStream {
public:
    explicit PermutationStream(int n);
    // nullptr-like end: returns false when exhausted, else fills word.
    bool next(std::vector<int>& word);

private:
    int n_;
    bool done_ = false;
    bool started_ = false;
    std::vector<int> word_;
};

// Cycle-form text syntax: "(1,6,2,4)(3,7,5)(8)". The empty form (n = 0)
// prints and parses as "". Parser and printer round-trip.
std::string to_string(const CycleForm& c);
CycleForm parse_cycle_form(std::string_view text);

} // namespace cycperm

#endif
