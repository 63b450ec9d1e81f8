#include "cycperm/perm.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <stdexcept>

namespace cycperm {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    int n = static_cast<int>(word_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : word_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("permutation word is not a bijection on 1..n");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(w));
}

std::string Permutation::to_string() const {
    std::string out;
    bool compact = size() <= 9;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (!compact && i > 0) out += ',';
        out += std::to_string(word_[i]);
    }
    return out;
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> w;
    bool separated = text.find(',') != std::string_view::npos ||
                     text.find(' ') != std::string_view::npos;
    if (separated) {
        int cur = 0;
        bool have = false;
        for (char ch : text) {
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                cur = cur * 10 + (ch - '0');
                have = true;
            } else if (ch == ',' || ch == ' ') {
                if (have) w.push_back(cur);
                cur = 0;
                have = false;
            } else {
                throw std::invalid_argument("permutation word: unexpected character");
            }
        }
        if (have) w.push_back(cur);
    } else {
        for (char ch : text) {
            if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0') {
                throw std::invalid_argument("permutation word: expected digits 1-9");
            }
            w.push_back(ch - '0');
        }
    }
    return Permutation(std::move(w));
}

void validate(const CycleForm& c) {
    std::vector<bool> seen(static_cast<std::size_t>(c.n) + 1, false);
    std::size_t count = 0;
    for (const auto& cyc : c.cycles) {
        if (cyc.empty()) throw std::invalid_argument("cycle form: empty cycle");
        for (int v : cyc) {
            if (v < 1 || v > c.n || seen[static_cast<std::size_t>(v)]) {
                throw std::invalid_argument("cycle form: cycles do not partition 1..n");
            }
            seen[static_cast<std::size_t>(v)] = true;
            ++count;
        }
    }
    if (count != static_cast<std::size_t>(c.n)) {
        throw std::invalid_argument("cycle form: cycles do not partition 1..n");
    }
}

bool is_standard(const CycleForm& c) {
    int prev_min = 0;
    for (const auto& cyc : c.cycles) {
        if (cyc.empty()) return false;
        int mn = *std::min_element(cyc.begin(), cyc.end());
        if (cyc.front() != mn || mn <= prev_min) return false;
        prev_min = mn;
    }
    return true;
}

CycleForm cycle_form(const Permutation& p) {
    int n = p.size();
    CycleForm c;
    c.n = n;
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cyc;
        int cur = start;
        do {
            seen[static_cast<std::size_t>(cur)] = true;
            cyc.push_back(cur);
            cur = p.image_of(cur);
        } while (cur != start);
        c.cycles.push_back(std::move(cyc));
    }
    return c;
}

Permutation permutation_of(const CycleForm& c) {
    validate(c);
    std::vector<int> w(static_cast<std::size_t>(c.n));
    for (const auto& cyc : c.cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i];
            int to = cyc[(i + 1) % cyc.size()];
            w[static_cast<std::size_t>(from) - 1] = to;
        }
    }
    return Permutation(std::move(w));
}

CycleForm standardize(const CycleForm& c) {
    validate(c);
    CycleForm r;
    r.n = c.n;
    r.cycles.reserve(c.cycles.size());
    for (const auto& cyc : c.cycles) {
        auto mn = std::min_element(cyc.begin(), cyc.end());
        std::vector<int> rot;
        rot.reserve(cyc.size());
        rot.insert(rot.end(), mn, cyc.end());
        rot.insert(rot.end(), cyc.begin(), mn);
        r.cycles.push_back(std::move(rot));
    }
    std::sort(r.cycles.begin(), r.cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return r;
}

CycleStats cycle_stats(const CycleForm& c) {
    CycleStats s;
    s.cyc = static_cast<int>(c.cycles.size());
    for (const auto& cyc : c.cycles) {
        if (cyc.size() == 1) ++s.fix;
        for (std::size_t m = 1; m + 1 < cyc.size(); ++m) {
            if (cyc[m - 1] < cyc[m] && cyc[m] > cyc[m + 1]) ++s.cpk;
            if (cyc[m - 1] > cyc[m] && cyc[m] < cyc[m + 1]) ++s.cval;
        }
    }
    return s;
}

LinearStats linear_stats(const Permutation& p) {
    LinearStats s;
    const auto& w = p.word();
    int n = p.size();
    if (n == 0) return s;
    s.runs = 1;
    for (int i = 1; i + 1 < n; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        bool peak = w[ui - 1] < w[ui] && w[ui] > w[ui + 1];
        bool valley = w[ui - 1] > w[ui] && w[ui] < w[ui + 1];
        if (peak) ++s.pk;
        if (valley) ++s.val;
        if (peak || valley) ++s.runs;
    }
    for (int i = 0; i + 1 < n; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        int left = i == 0 ? 0 : w[ui - 1];
        if (left < w[ui] && w[ui] > w[ui + 1]) ++s.lpk;
    }
    return s;
}

CycleForm switching(const CycleForm& c) {
    validate(c);
    CycleForm r;
    r.n = c.n;
    r.cycles.reserve(c.cycles.size());
    for (const auto& cyc : c.cycles) {
        std::vector<int> sorted = cyc;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> out;
        out.reserve(cyc.size());
        for (int v : cyc) {
            auto pos = std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin();
            out.push_back(sorted[sorted.size() - 1 - static_cast<std::size_t>(pos)]);
        }
        r.cycles.push_back(std::move(out));
    }
    return r;
}

Flattened flatten(const CycleForm& c) {
    validate(c);
    if (!is_standard(c)) throw std::invalid_argument("flatten: cycle form is not standard");
    Flattened f;
    f.word.reserve(static_cast<std::size_t>(c.n));
    for (std::size_t j = 0; j < c.cycles.size(); ++j) {
        f.word.insert(f.word.end(), c.cycles[j].begin(), c.cycles[j].end());
        if (j + 1 < c.cycles.size()) f.boundaries.push_back(static_cast<int>(f.word.size()));
    }
    return f;
}

Pattern Pattern::parse(std::string_view text) {
    Pattern p;
    bool prev_was_letter = false;
    for (char ch : text) {
        if (std::isdigit(static_cast<unsigned char>(ch)) && ch != '0') {
            if (prev_was_letter) p.adjacent.push_back(true);
            p.letters.push_back(ch - '0');
            prev_was_letter = true;
        } else if (ch == '-') {
            if (!prev_was_letter) throw std::invalid_argument("pattern: misplaced dash");
            p.adjacent.push_back(false);
            prev_was_letter = false;
        } else {
            throw std::invalid_argument("pattern: expected digits 1-9 or '-'");
        }
    }
    if (!p.letters.empty() && p.adjacent.size() != p.letters.size() - 1) {
        throw std::invalid_argument("pattern: trailing dash");
    }
    int m = static_cast<int>(p.letters.size());
    std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
    for (int v : p.letters) {
        if (v > m || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("pattern: letters must form a permutation of 1..m");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
    return p;
}

long long cyclic_pattern_count(const CycleForm& c, const Pattern& pat) {
    const int m = static_cast<int>(pat.letters.size());
    if (m == 0 || m > 4) {
        throw std::invalid_argument("cyclic_pattern_count: pattern length must be 1..4");
    }
    Flattened f = flatten(c);
    const int n = static_cast<int>(f.word.size());
    std::vector<bool> boundary_after(static_cast<std::size_t>(n) + 1, false);
    for (int b : f.boundaries) boundary_after[static_cast<std::size_t>(b)] = true;

    std::vector<int> idx(static_cast<std::size_t>(m));
    long long count = 0;

    auto matches_order = [&]() {
        for (int a = 0; a < m; ++a) {
            for (int b = a + 1; b < m; ++b) {
                bool host_less = f.word[static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])] <
                                 f.word[static_cast<std::size_t>(idx[static_cast<std::size_t>(b)])];
                bool pat_less = pat.letters[static_cast<std::size_t>(a)] <
                                pat.letters[static_cast<std::size_t>(b)];
                if (host_less != pat_less) return false;
            }
        }
        return true;
    };

    std::function<void(int)> rec = [&](int depth) {
        if (depth == m) {
            if (matches_order()) ++count;
            return;
        }
        const auto d = static_cast<std::size_t>(depth);
        if (depth > 0 && pat.adjacent[d - 1]) {
            int i = idx[d - 1] + 1;
            // 1-based position of the earlier letter is idx+1
            if (i < n && !boundary_after[static_cast<std::size_t>(idx[d - 1]) + 1]) {
                idx[d] = i;
                rec(depth + 1);
            }
            return;
        }
        int lo = depth == 0 ? 0 : idx[d - 1] + 1;
        for (int i = lo; i < n; ++i) {
            idx[d] = i;
            rec(depth + 1);
        }
    };
    rec(0);
    return count;
}

Permutation unwrap_circular(const CycleForm& c) {
    validate(c);
    if (c.cycles.size() != 1) {
        throw std::invalid_argument("unwrap_circular: form must be a single cycle");
    }
    const auto& cyc = c.cycles.front();
    if (cyc.front() != 1) {
        throw std::invalid_argument("unwrap_circular: cycle must be written starting at 1");
    }
    std::vector<int> w;
    w.reserve(cyc.size() - 1);
    for (std::size_t i = 1; i < cyc.size(); ++i) w.push_back(cyc[i] - 1);
    return Permutation(std::move(w));
}

namespace {
void check_enumeration_size(int n) {
    if (n < 0) throw std::invalid_argument("enumeration: n must be nonnegative");
    if (n > kEnumerationCap) {
        throw std::length_error("enumeration: n exceeds the enumeration cap of " +
                                std::to_string(kEnumerationCap));
    }
}
} // namespace

void for_each_permutation(int n, const std::function<void(const std::vector<int>&)>& fn) {
    check_enumeration_size(n);
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    do {
        fn(w);
    } while (std::next_permutation(w.begin(), w.end()));
}

void for_each_permutation_with_first(int n, int first,
                                     const std::function<void(const std::vector<int>&)>& fn) {
    check_enumeration_size(n);
    if (n < 1 || first < 1 || first > n) {
        throw std::invalid_argument("enumeration: first entry out of range");
    }
    std::vector<int> w(static_cast<std::size_t>(n));
    w[0] = first;
    int next = 1;
    for (int i = 1; i < n; ++i) {
        if (next == first) ++next;
        w[static_cast<std::size_t>(i)] = next++;
    }
    do {
        fn(w);
    } while (std::next_permutation(w.begin() + 1, w.end()));
}

PermutationStream::PermutationStream(int n) : n_(n) {
    check_enumeration_size(n);
    word_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) word_[static_cast<std::size_t>(i)] = i + 1;
}

bool PermutationStream::next(std::vector<int>& word) {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        word = word_;
        return true;
    }
    if (!std::next_permutation(word_.begin(), word_.end())) {
        done_ = true;
        return false;
    }
    word = word_;
    return true;
}

std::string to_string(const CycleForm& c) {
    std::string out;
    for (const auto& cyc : c.cycles) {
        out += '(';
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i > 0) out += ',';
            out += std::to_string(cyc[i]);
        }
        out += ')';
    }
    return out;
}

CycleForm parse_cycle_form(std::string_view text) {
    CycleForm c;
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_space();
    while (pos < text.size()) {
        if (text[pos] != '(') {
            throw std::invalid_argument("cycle form parse error at offset " + std::to_string(pos) +
                                        ": expected '('");
        }
        ++pos;
        std::vector<int> cyc;
        while (true) {
            skip_space();
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) {
                throw std::invalid_argument("cycle form parse error at offset " +
                                            std::to_string(pos) + ": expected an entry");
            }
            cyc.push_back(std::stoi(std::string(text.substr(start, pos - start))));
            skip_space();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            break;
        }
        if (pos >= text.size() || text[pos] != ')') {
            throw std::invalid_argument("cycle form parse error at offset " + std::to_string(pos) +
                                        ": expected ')'");
        }
        ++pos;
        c.cycles.push_back(std::move(cyc));
        skip_space();
    }
    int count = 0;
    for (const auto& cyc : c.cycles) count += static_cast<int>(cyc.size());
    c.n = count;
    validate(c);
    return c;
}

} // namespace cycperm
