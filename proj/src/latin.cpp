#include "framekit/latin.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace framekit::latin {

namespace {

std::string cell_name(int r, int c) {
    return "cell (" + std::to_string(r) + "," + std::to_string(c) + ")";
}

void check_counts(ValidityReport& report, const std::vector<int>& counts, const std::string& where) {
    for (std::size_t sym = 0; sym < counts.size(); ++sym) {
        if (counts[sym] == 0)
            report.add("symbol-missing", where, "symbol " + std::to_string(sym) + " does not occur");
        else if (counts[sym] > 1)
            report.add("symbol-repeated", where,
                       "symbol " + std::to_string(sym) + " occurs " + std::to_string(counts[sym]) + " times");
    }
}

/// Small finite field GF(p^d), elements encoded as base-p digit strings.
/// Only the tiny fields the constructions need are instantiated.
class SmallField {
  public:
    SmallField(int p, int d, std::vector<int> reduction) : p_(p), d_(d), reduction_(std::move(reduction)) {
        q_ = 1;
        for (int i = 0; i < d_; ++i) q_ *= p_;
    }

    int q() const { return q_; }

    int add(int a, int b) const {
        int r = 0, pw = 1;
        for (int i = 0; i < d_; ++i) {
            r += ((a % p_ + b % p_) % p_) * pw;
            a /= p_;
            b /= p_;
            pw *= p_;
        }
        return r;
    }

    int mul(int a, int b) const {
        // Polynomial product, then reduce with x^d = reduction_.
        std::vector<int> prod(2 * d_ - 1, 0);
        std::vector<int> da(d_), db(d_);
        for (int i = 0; i < d_; ++i, a /= p_) da[i] = a % p_;
        for (int i = 0; i < d_; ++i, b /= p_) db[i] = b % p_;
        for (int i = 0; i < d_; ++i)
            for (int j = 0; j < d_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        for (int k = 2 * d_ - 2; k >= d_; --k) {
            int coeff = prod[k];
            if (coeff == 0) continue;
            prod[k] = 0;
            for (int i = 0; i < d_; ++i) prod[k - d_ + i] = (prod[k - d_ + i] + coeff * reduction_[i]) % p_;
        }
        int r = 0, pw = 1;
        for (int i = 0; i < d_; ++i, pw *= p_) r += prod[i] * pw;
        return r;
    }

    int inverse(int a) const {
        for (int b = 1; b < q_; ++b)
            if (mul(a, b) == 1) return b;
        throw std::invalid_argument("no inverse of 0");
    }

  private:
    int p_, d_, q_;
    std::vector<int> reduction_;  // digits of x^d as a lower-degree polynomial
};

// Bundled irreducibles: x^2+x+1 over GF(2), x^3+x+1 over GF(2), x^2+x+2 over GF(3).
SmallField make_field(int q) {
    if (q == 4) return SmallField(2, 2, {1, 1});   // x^2 = x + 1
    if (q == 8) return SmallField(2, 3, {1, 1, 0});  // x^3 = x + 1
    if (q == 9) return SmallField(3, 2, {1, 2});   // x^2 = 2x + 1
    throw std::invalid_argument("no bundled field of order " + std::to_string(q));
}

LatinSquare field_square(const SmallField& f, int a) {
    LatinSquare sq;
    sq.order = f.q();
    sq.grid.assign(sq.order, std::vector<int>(sq.order, 0));
    for (int x = 0; x < sq.order; ++x)
        for (int y = 0; y < sq.order; ++y) sq.grid[x][y] = f.add(f.mul(a, x), y);
    return sq;
}

LatinSquare cyclic_square(int s, int a, int b) {
    LatinSquare sq;
    sq.order = s;
    sq.grid.assign(s, std::vector<int>(s, 0));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) sq.grid[i][j] = ((a * i + b * j) % s + s) % s;
    return sq;
}

OrthogonalPair power_of_two_pair(int exponent) {
    // 2^e as a product of factors 4 and 8, e >= 2.
    if (exponent == 2) {
        SmallField f = make_field(4);
        return {field_square(f, 1), field_square(f, 2)};
    }
    if (exponent == 3) {
        SmallField f = make_field(8);
        return {field_square(f, 1), field_square(f, 2)};
    }
    return direct_product(power_of_two_pair(2), power_of_two_pair(exponent - 2));
}

}  // namespace

ValidityReport verify_latin(const LatinSquare& square) {
    ValidityReport report;
    int s = square.order;
    if (s <= 0 || static_cast<int>(square.grid.size()) != s) {
        report.add("shape", "grid", "grid is not " + std::to_string(s) + " rows");
        return report;
    }
    for (int r = 0; r < s; ++r) {
        if (static_cast<int>(square.grid[r].size()) != s) {
            report.add("shape", "row " + std::to_string(r), "wrong length");
            return report;
        }
        for (int c = 0; c < s; ++c)
            if (square.grid[r][c] < 0 || square.grid[r][c] >= s) {
                report.add("shape", cell_name(r, c), "entry out of range");
                return report;
            }
    }
    for (int r = 0; r < s; ++r) {
        std::vector<int> counts(s, 0);
        for (int c = 0; c < s; ++c) counts[square.grid[r][c]]++;
        check_counts(report, counts, "row " + std::to_string(r));
    }
    for (int c = 0; c < s; ++c) {
        std::vector<int> counts(s, 0);
        for (int r = 0; r < s; ++r) counts[square.grid[r][c]]++;
        check_counts(report, counts, "column " + std::to_string(c));
    }
    return report;
}

ValidityReport verify_orthogonal_pair(const OrthogonalPair& pair) {
    ValidityReport report;
    if (pair.first.order != pair.second.order) {
        report.add("shape", "pair", "orders differ");
        return report;
    }
    report.merge(verify_latin(pair.first));
    report.merge(verify_latin(pair.second));
    if (!report.valid()) return report;
    int s = pair.first.order;
    std::vector<int> seen(s * s, -1);
    for (int r = 0; r < s; ++r)
        for (int c = 0; c < s; ++c) {
            int key = pair.first.at(r, c) * s + pair.second.at(r, c);
            if (seen[key] >= 0) {
                report.add("pair-repeated", cell_name(r, c),
                           "superposed pair (" + std::to_string(pair.first.at(r, c)) + "," +
                               std::to_string(pair.second.at(r, c)) + ") already at " +
                               cell_name(seen[key] / s, seen[key] % s));
                return report;
            }
            seen[key] = r * s + c;
        }
    return report;
}

ValidityReport verify_incomplete_pair(const IncompleteOLSPair& pair) {
    ValidityReport report;
    int s = pair.order, m = pair.hole;
    if (s <= 0 || m < 0 || m > s) {
        report.add("shape", "pair", "bad order/hole sizes");
        return report;
    }
    for (const auto* grid : {&pair.first, &pair.second}) {
        if (static_cast<int>(grid->size()) != s) {
            report.add("shape", "grid", "wrong row count");
            return report;
        }
        for (int r = 0; r < s; ++r) {
            if (static_cast<int>((*grid)[r].size()) != s) {
                report.add("shape", "row " + std::to_string(r), "wrong length");
                return report;
            }
            for (int c = 0; c < s; ++c) {
                int e = (*grid)[r][c];
                bool hole = r >= s - m && c >= s - m;
                if (hole && e >= 0) report.add("hole-not-empty", cell_name(r, c), "hole cell is filled");
                if (!hole && (e < 0 || e >= s)) report.add("cell-shape", cell_name(r, c), "entry missing or out of range");
            }
        }
    }
    if (!report.valid()) return report;

    auto check_lines = [&](const std::vector<std::vector<int>>& grid, bool columns, const char* which) {
        for (int i = 0; i < s; ++i) {
            std::vector<int> counts(s, 0);
            for (int j = 0; j < s; ++j) {
                int e = columns ? grid[j][i] : grid[i][j];
                if (e >= 0) counts[e]++;
            }
            std::string where = std::string(which) + (columns ? " column " : " row ") + std::to_string(i);
            for (int sym = 0; sym < s; ++sym) {
                bool hole_sym = sym >= s - m;
                if (hole_sym ? counts[sym] > 1 : counts[sym] != 1)
                    report.add(hole_sym ? "symbol-repeated" : "symbol-coverage", where,
                               "symbol " + std::to_string(sym) + " occurs " + std::to_string(counts[sym]) + " times");
            }
        }
    };
    check_lines(pair.first, false, "first");
    check_lines(pair.first, true, "first");
    check_lines(pair.second, false, "second");
    check_lines(pair.second, true, "second");

    std::vector<int> seen(s * s, -1);
    for (int r = 0; r < s; ++r)
        for (int c = 0; c < s; ++c) {
            if (pair.first[r][c] < 0) continue;
            int a = pair.first[r][c], b = pair.second[r][c];
            if (a >= s - m && b >= s - m)
                report.add("hole-pair", cell_name(r, c), "superposition pairs two hole symbols");
            int key = a * s + b;
            if (seen[key] >= 0)
                report.add("pair-repeated", cell_name(r, c),
                           "superposed pair already at " + cell_name(seen[key] / s, seen[key] % s));
            seen[key] = r * s + c;
        }
    return report;
}

bool is_transversal(const LatinSquare& square, const Transversal& t) {
    int s = square.order;
    if (static_cast<int>(t.cells.size()) != s) return false;
    std::vector<int> rows(s, 0), cols(s, 0), vals(s, 0);
    for (auto [r, c] : t.cells) {
        if (r < 0 || r >= s || c < 0 || c >= s) return false;
        rows[r]++;
        cols[c]++;
        vals[square.at(r, c)]++;
    }
    for (int i = 0; i < s; ++i)
        if (rows[i] != 1 || cols[i] != 1 || vals[i] != 1) return false;
    return true;
}

LatinSquare direct_product(const LatinSquare& a, const LatinSquare& b) {
    LatinSquare out;
    out.order = a.order * b.order;
    out.grid.assign(out.order, std::vector<int>(out.order, 0));
    for (int i1 = 0; i1 < a.order; ++i1)
        for (int i2 = 0; i2 < b.order; ++i2)
            for (int j1 = 0; j1 < a.order; ++j1)
                for (int j2 = 0; j2 < b.order; ++j2)
                    out.grid[i1 * b.order + i2][j1 * b.order + j2] = a.at(i1, j1) * b.order + b.at(i2, j2);
    return out;
}

OrthogonalPair direct_product(const OrthogonalPair& a, const OrthogonalPair& b) {
    return {direct_product(a.first, b.first), direct_product(a.second, b.second)};
}

OrthogonalPair mols_pair(int s) {
    if (s <= 0) throw std::invalid_argument("order must be positive");
    if (s == 1) {
        LatinSquare one{1, {{0}}};
        return {one, one};
    }
    if (s == 2 || s == 6)
        throw std::invalid_argument("no pair of orthogonal latin squares of side " + std::to_string(s));
    if (s % 2 == 1) return {cyclic_square(s, 1, 1), cyclic_square(s, 1, 2)};
    int exponent = 0, odd = s;
    while (odd % 2 == 0) {
        odd /= 2;
        ++exponent;
    }
    if (exponent == 1)
        throw std::invalid_argument("pair of orthogonal latin squares of side " + std::to_string(s) +
                                    " unsupported; supply externally");
    OrthogonalPair pair = power_of_two_pair(exponent);
    if (odd > 1) pair = direct_product(pair, mols_pair(odd));
    return pair;
}

OrthogonalPair sols_diagonal(int u) {
    if (u == 9) {
        // M(i,j) = (a+1)^{-1} (a i + j) over GF(9), a = x: self-orthogonal,
        // idempotent, and M agrees with its transpose exactly on the diagonal.
        SmallField f = make_field(9);
        int a = 3;  // the polynomial x
        int c = f.inverse(f.add(a, 1));
        LatinSquare sols;
        sols.order = 9;
        sols.grid.assign(9, std::vector<int>(9, 0));
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j) sols.grid[i][j] = f.mul(c, f.add(f.mul(a, i), j));
        LatinSquare transpose = sols;
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j) transpose.grid[i][j] = sols.grid[j][i];
        return {sols, transpose};
    }
    if (u < 5 || u % 2 == 0 || u % 3 == 0)
        throw std::invalid_argument("no supported self-orthogonal latin square of order " + std::to_string(u) +
                                    "; supply one externally");
    LatinSquare sols = cyclic_square(u, 2, -1);  // L(i,j) = 2i - j, idempotent
    LatinSquare transpose = cyclic_square(u, -1, 2);
    return {sols, transpose};
}

}  // namespace framekit::latin
