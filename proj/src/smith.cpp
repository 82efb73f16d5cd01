#include "lensgem/smith.hpp"

#include <limits>
#include <ostream>
#include <sstream>

namespace lensgem {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> init) {
    rows = init.size();
    cols = rows ? init.begin()->size() : 0;
    for (const auto& row : init) {
        if (row.size() != cols) throw std::invalid_argument("ragged matrix literal");
        data.insert(data.end(), row.begin(), row.end());
    }
}

void write_matrix(std::ostream& out, const IntegerMatrix& m) {
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c) out << (c ? " " : "") << m(r, c);
        out << '\n';
    }
}

bool AbelianGroup::is_cyclic_of_order(long p) const {
    if (free_rank != 0) return false;
    if (p == 1) return torsion.empty();
    return torsion.size() == 1 && torsion.front() == p;
}

std::string to_string(const AbelianGroup& g) {
    if (g.trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    if (g.free_rank > 0) {
        out << "Z^" << g.free_rank;
        first = false;
    }
    for (const auto& d : g.torsion) {
        out << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    return out.str();
}

namespace {

struct Overflow {};

// Checked arithmetic for the fast path; plain arithmetic for BigInt.
inline std::int64_t sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
    std::int64_t prod = 0, out = 0;
    if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out)) throw Overflow{};
    return out;
}
inline BigInt sub_mul(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw Overflow{};
    return out;
}
inline BigInt add(const BigInt& a, const BigInt& b) { return a + b; }

inline std::int64_t magnitude(std::int64_t a) {
    if (a == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
    return a < 0 ? -a : a;
}
inline BigInt magnitude(const BigInt& a) { return abs(a); }

template <class T>
class Reducer {
public:
    Reducer(const IntegerMatrix& m) : rows_(m.rows), cols_(m.cols), a_(m.data.begin(), m.data.end()) {}

    std::vector<T> diagonal() {
        std::vector<T> diag;
        const std::size_t limit = std::min(rows_, cols_);
        for (std::size_t t = 0; t < limit; ++t) {
            std::size_t pi = 0, pj = 0;
            if (!min_entry(t, pi, pj)) break;
            move_to(t, pi, pj);
            reduce_at(t);
            diag.push_back(magnitude(at(t, t)));
        }
        return diag;
    }

private:
    T& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    /// Least non-zero entry of the trailing submatrix starting at (t, t).
    bool min_entry(std::size_t t, std::size_t& pi, std::size_t& pj) {
        bool found = false;
        T best{};
        for (std::size_t r = t; r < rows_; ++r) {
            for (std::size_t c = t; c < cols_; ++c) {
                const T& v = at(r, c);
                if (v == 0) continue;
                T m = magnitude(v);
                if (!found || m < best) {
                    best = m;
                    pi = r;
                    pj = c;
                    found = true;
                }
            }
        }
        return found;
    }

    void move_to(std::size_t t, std::size_t r, std::size_t c) {
        if (r != t) {
            for (std::size_t k = t; k < cols_; ++k) std::swap(at(t, k), at(r, k));
        }
        if (c != t) {
            for (std::size_t k = t; k < rows_; ++k) std::swap(at(k, t), at(k, c));
        }
    }

    /// Clears row t and column t and enforces divisibility of the remainder.
    void reduce_at(std::size_t t) {
        while (true) {
            bool clean = true;
            for (std::size_t r = t + 1; r < rows_; ++r) {
                if (at(r, t) == 0) continue;
                const T q = at(r, t) / at(t, t);
                for (std::size_t k = t; k < cols_; ++k) at(r, k) = sub_mul(at(r, k), q, at(t, k));
                if (at(r, t) != 0) clean = false;
            }
            for (std::size_t c = t + 1; c < cols_; ++c) {
                if (at(t, c) == 0) continue;
                const T q = at(t, c) / at(t, t);
                for (std::size_t k = t; k < rows_; ++k) at(k, c) = sub_mul(at(k, c), q, at(k, t));
                if (at(t, c) != 0) clean = false;
            }
            if (!clean) {
                std::size_t pi = t, pj = t;
                scan_cross(t, pi, pj);
                move_to(t, pi, pj);
                continue;
            }
            bool divisible = true;
            for (std::size_t r = t + 1; r < rows_ && divisible; ++r) {
                for (std::size_t c = t + 1; c < cols_; ++c) {
                    if (at(r, c) % at(t, t) != 0) {
                        for (std::size_t k = t; k < cols_; ++k) at(t, k) = add(at(t, k), at(r, k));
                        divisible = false;
                        break;
                    }
                }
            }
            if (divisible) return;
        }
    }

    /// Least non-zero entry in row t or column t.
    void scan_cross(std::size_t t, std::size_t& pi, std::size_t& pj) {
        T best = magnitude(at(t, t));
        pi = pj = t;
        for (std::size_t r = t + 1; r < rows_; ++r) {
            if (at(r, t) != 0 && magnitude(at(r, t)) < best) {
                best = magnitude(at(r, t));
                pi = r;
                pj = t;
            }
        }
        for (std::size_t c = t + 1; c < cols_; ++c) {
            if (at(t, c) != 0 && magnitude(at(t, c)) < best) {
                best = magnitude(at(t, c));
                pi = t;
                pj = c;
            }
        }
    }

    std::size_t rows_, cols_;
    std::vector<T> a_;
};

}  // namespace

std::vector<BigInt> invariant_factors(const IntegerMatrix& m) {
    try {
        Reducer<std::int64_t> fast(m);
        const auto diag = fast.diagonal();
        return {diag.begin(), diag.end()};
    } catch (const Overflow&) {
        Reducer<BigInt> exact(m);
        return exact.diagonal();
    }
}

AbelianGroup smith_normal_form(const IntegerMatrix& m) {
    const auto diag = invariant_factors(m);
    AbelianGroup g;
    g.free_rank = static_cast<int>(m.cols - diag.size());
    for (const auto& d : diag) {
        if (d > 1) g.torsion.push_back(d);
    }
    return g;
}

}  // namespace lensgem
