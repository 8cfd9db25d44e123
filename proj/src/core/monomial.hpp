#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core/errors.hpp"
#include "core/names.hpp"

namespace monomtest {

// Sparse exponent vector; entries sorted by variable index, no zero
// exponents stored. The empty vector is the monomial 1.
class Monomial {
public:
    using Entry = std::pair<VarIndex, std::uint32_t>;

    Monomial() = default;

    static Monomial var(VarIndex i, std::uint32_t e = 1) {
        Monomial m;
        if (e > 0) m.entries_.emplace_back(i, e);
        return m;
    }

    static Monomial from_entries(std::vector<Entry> entries) {
        std::sort(entries.begin(), entries.end());
        Monomial m;
        for (const Entry& en : entries) {
            if (en.second == 0) continue;
            if (!m.entries_.empty() && m.entries_.back().first == en.first)
                throw Error(ErrorKind::Internal, "duplicate variable in monomial");
            m.entries_.push_back(en);
        }
        return m;
    }

    bool is_one() const { return entries_.empty(); }
    const std::vector<Entry>& entries() const { return entries_; }

    std::uint32_t exponent(VarIndex i) const {
        for (const Entry& en : entries_) {
            if (en.first == i) return en.second;
            if (en.first > i) break;
        }
        return 0;
    }

    bool depends_on(VarIndex i) const { return exponent(i) > 0; }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const Entry& en : entries_) d += en.second;
        return d;
    }

    // smallest variable index present; 0 for the monomial 1
    VarIndex min_var() const { return entries_.empty() ? 0 : entries_.front().first; }
    VarIndex max_var() const { return entries_.empty() ? 0 : entries_.back().first; }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        std::size_t ia = 0, ib = 0;
        while (ia < entries_.size() || ib < o.entries_.size()) {
            if (ib == o.entries_.size() ||
                (ia < entries_.size() && entries_[ia].first < o.entries_[ib].first)) {
                r.entries_.push_back(entries_[ia++]);
            } else if (ia == entries_.size() || o.entries_[ib].first < entries_[ia].first) {
                r.entries_.push_back(o.entries_[ib++]);
            } else {
                r.entries_.emplace_back(entries_[ia].first,
                                        entries_[ia].second + o.entries_[ib].second);
                ++ia;
                ++ib;
            }
        }
        return r;
    }

    bool divides(const Monomial& o) const {
        for (const Entry& en : entries_)
            if (o.exponent(en.first) < en.second) return false;
        return true;
    }

    // *this / d; requires d.divides(*this)
    Monomial quotient_by(const Monomial& d) const {
        Monomial r;
        for (const Entry& en : entries_) {
            std::uint32_t e = d.exponent(en.first);
            if (e > en.second) throw Error(ErrorKind::Internal, "monomial quotient underflow");
            if (en.second > e) r.entries_.emplace_back(en.first, en.second - e);
        }
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        std::size_t ia = 0, ib = 0;
        while (ia < a.entries_.size() || ib < b.entries_.size()) {
            if (ib == b.entries_.size() ||
                (ia < a.entries_.size() && a.entries_[ia].first < b.entries_[ib].first)) {
                r.entries_.push_back(a.entries_[ia++]);
            } else if (ia == a.entries_.size() || b.entries_[ib].first < a.entries_[ia].first) {
                r.entries_.push_back(b.entries_[ib++]);
            } else {
                r.entries_.emplace_back(a.entries_[ia].first,
                                        std::max(a.entries_[ia].second, b.entries_[ib].second));
                ++ia;
                ++ib;
            }
        }
        return r;
    }

    // drop the T_i entry
    Monomial without_var(VarIndex i) const {
        Monomial r;
        for (const Entry& en : entries_)
            if (en.first != i) r.entries_.push_back(en);
        return r;
    }

    // restrict to variables accepted by pred
    template <class Pred>
    Monomial filtered(Pred pred) const {
        Monomial r;
        for (const Entry& en : entries_)
            if (pred(en.first)) r.entries_.push_back(en);
        return r;
    }

    // Lex with T1 > T2 > ...: positive result means a > b. The more
    // significant variable is the one with the smaller index.
    static int lex_compare(const Monomial& a, const Monomial& b) {
        std::size_t ia = 0, ib = 0;
        while (ia < a.entries_.size() || ib < b.entries_.size()) {
            VarIndex va = ia < a.entries_.size() ? a.entries_[ia].first : ~VarIndex{0};
            VarIndex vb = ib < b.entries_.size() ? b.entries_[ib].first : ~VarIndex{0};
            VarIndex v = std::min(va, vb);
            std::uint32_t ea = (va == v) ? a.entries_[ia].second : 0;
            std::uint32_t eb = (vb == v) ? b.entries_[ib].second : 0;
            if (ea != eb) return ea > eb ? 1 : -1;
            if (va == v) ++ia;
            if (vb == v) ++ib;
        }
        return 0;
    }

    // graded reverse lexicographic; positive result means a > b
    static int degrevlex_compare(const Monomial& a, const Monomial& b) {
        std::uint64_t da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db ? 1 : -1;
        // at the largest index where exponents differ, smaller exponent wins
        std::size_t ia = a.entries_.size(), ib = b.entries_.size();
        while (ia > 0 || ib > 0) {
            VarIndex va = ia > 0 ? a.entries_[ia - 1].first : 0;
            VarIndex vb = ib > 0 ? b.entries_[ib - 1].first : 0;
            VarIndex v = std::max(va, vb);
            std::uint32_t ea = (ia > 0 && va == v) ? a.entries_[ia - 1].second : 0;
            std::uint32_t eb = (ib > 0 && vb == v) ? b.entries_[ib - 1].second : 0;
            if (ea != eb) return ea < eb ? 1 : -1;
            if (ia > 0 && va == v) --ia;
            if (ib > 0 && vb == v) --ib;
        }
        return 0;
    }

    bool operator==(const Monomial&) const = default;

    std::string to_string(const NameTable& names = {}) const {
        if (entries_.empty()) return "1";
        std::string s;
        for (const Entry& en : entries_) {
            if (!s.empty()) s += "*";
            s += names.name(en.first);
            if (en.second != 1) s += "^" + std::to_string(en.second);
        }
        return s;
    }

private:
    std::vector<Entry> entries_;
};

struct LexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::lex_compare(a, b) > 0;
    }
};

}  // namespace monomtest
