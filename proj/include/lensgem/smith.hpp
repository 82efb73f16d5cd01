#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lensgem {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix.
struct IntegerMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int64_t> data;

    IntegerMatrix() = default;
    IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> init);

    std::int64_t& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;
};

/// Rows of space-separated integers.
void write_matrix(std::ostream& out, const IntegerMatrix& m);

/// Finitely generated abelian group Z^free_rank + Z/d1 + ... with d1 | d2 | ...
/// and every d >= 2.
struct AbelianGroup {
    int free_rank = 0;
    std::vector<BigInt> torsion;

    [[nodiscard]] bool trivial() const { return free_rank == 0 && torsion.empty(); }
    /// True for Z/p (p >= 2), or the trivial group when p == 1.
    [[nodiscard]] bool is_cyclic_of_order(long p) const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// `Z^r + Z/d1 + Z/d2 ...`; the free part is omitted when r = 0 and the
/// trivial group renders as `0`.
std::string to_string(const AbelianGroup& g);

/// Cokernel of the row space: Z^cols / <rows>. Pivots on the entry of least
/// absolute value; runs in int64 and restarts in arbitrary precision if any
/// intermediate overflows.
AbelianGroup smith_normal_form(const IntegerMatrix& m);

/// Invariant factors (including 1s) of the diagonal form, in divisibility order.
std::vector<BigInt> invariant_factors(const IntegerMatrix& m);

}  // namespace lensgem
