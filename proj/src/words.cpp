#include "amalgam/words.hpp"
#include "amalgam/errors.hpp"

#include <algorithm>
#include <array>

namespace amalgam {

int letter_rank(Letter l) {
    // +g before -g, generators in index order.
    const int g = (l > 0 ? l : -l);
    return 2 * (g - 1) + (l < 0 ? 1 : 0);
}

Word inverse_word(const Word& w) {
    Word r(w.size());
    for (size_t i = 0; i < w.size(); ++i) r[i] = static_cast<Letter>(-w[w.size() - 1 - i]);
    return r;
}

Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Letter l : w) {
        if (!out.empty() && out.back() == -l) out.pop_back();
        else out.push_back(l);
    }
    return out;
}

Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    size_t lo = 0, hi = r.size();
    while (hi - lo >= 2 && r[lo] == -r[hi - 1]) { ++lo; --hi; }
    return Word(r.begin() + lo, r.begin() + hi);
}

bool word_rank_less(const Word& x, const Word& y) {
    for (size_t i = 0; i < x.size() && i < y.size(); ++i) {
        const int rx = letter_rank(x[i]), ry = letter_rank(y[i]);
        if (rx != ry) return rx < ry;
    }
    return x.size() < y.size();
}

namespace {
bool rank_less(const Word& x, const Word& y) { return word_rank_less(x, y); }
} // namespace

Word canonical_cyclic(const Word& w0) {
    Word w = cyclic_reduce(w0);
    if (w.empty()) return w;
    Word best;
    for (const Word& base : {w, inverse_word(w)}) {
        for (size_t i = 0; i < base.size(); ++i) {
            Word rot(base.begin() + i, base.end());
            rot.insert(rot.end(), base.begin(), base.begin() + i);
            if (best.empty() || rank_less(rot, best)) best = std::move(rot);
        }
    }
    return best;
}

bool is_primitive(const Word& w) {
    const size_t n = w.size();
    if (n == 0) return false;
    for (size_t p = 1; p < n; ++p) {
        if (n % p != 0) continue;
        bool periodic = true;
        for (size_t i = 0; i < n && periodic; ++i)
            periodic = (w[i] == w[(i + p) % n]);
        if (periodic) return false;
    }
    return true;
}

std::vector<long> homology_class(const Word& w, int num_gens) {
    std::vector<long> h(static_cast<size_t>(num_gens), 0);
    for (Letter l : w) {
        const int g = (l > 0 ? l : -l);
        if (g > num_gens) throw domain_error("homology_class: letter outside alphabet");
        h[static_cast<size_t>(g - 1)] += (l > 0 ? 1 : -1);
    }
    return h;
}

int syllable_count(const Word& w0) {
    const Word w = cyclic_reduce(w0);
    if (w.empty()) return 0;
    auto factor = [](Letter l) { return (l == 1 || l == -1 || l == 2 || l == -2) ? 0 : 1; };
    // Cyclic factor transitions; even by construction, 0 for one-factor words.
    int transitions = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        const size_t prev = (i + w.size() - 1) % w.size();
        if (factor(w[i]) != factor(w[prev])) ++transitions;
    }
    return transitions;
}

std::string word_to_string(const Word& w) {
    static const char* pos = "abcd";
    static const char* neg = "ABCD";
    std::string s;
    s.reserve(w.size());
    for (Letter l : w) {
        const int g = (l > 0 ? l : -l);
        if (g < 1 || g > 4) throw domain_error("word_to_string: letter outside alphabet");
        s.push_back(l > 0 ? pos[g - 1] : neg[g - 1]);
    }
    return s.empty() ? "e" : s;
}

Word word_from_string(const std::string& s) {
    if (s == "e" || s.empty()) return {};
    Word w;
    w.reserve(s.size());
    for (char ch : s) {
        Letter l = 0;
        if (ch >= 'a' && ch <= 'd') l = static_cast<Letter>(ch - 'a' + 1);
        else if (ch >= 'A' && ch <= 'D') l = static_cast<Letter>(-(ch - 'A' + 1));
        else throw domain_error(std::string("word_from_string: bad character '") + ch + "'");
        w.push_back(l);
    }
    return w;
}

long algebraic_intersection(const std::pair<long, long>& h1,
                            const std::pair<long, long>& h2) {
    return h1.first * h2.second - h1.second * h2.first;
}

Word twist_word(Letter target, Letter twister, long k) {
    if (k < 0) throw domain_error("twist_word: twist count must be nonnegative");
    Letter repeat = 0;
    if (target == 2 && twister == 1) repeat = 1;
    else if (target == 1 && twister == 2) repeat = -2;
    else throw domain_error("twist_word: unsupported target/twister pair");
    Word w;
    w.reserve(static_cast<size_t>(k) + 1);
    w.push_back(target);
    for (long i = 0; i < k; ++i) w.push_back(repeat);
    return w;
}

} // namespace amalgam
