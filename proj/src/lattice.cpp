#include "wang/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace wang {

int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

int64_t floor_mod(int64_t a, int64_t b) { return a - floor_div(a, b) * b; }

namespace {

void axpy(Point& y, int64_t k, const Point& x) {
    for (size_t i = 0; i < y.size(); ++i) y[i] += k * x[i];
}

}  // namespace

PeriodLattice::PeriodLattice(const std::vector<Point>& generators) : generators_(generators) {
    dim_ = static_cast<int>(generators.size());
    if (dim_ == 0) throw std::invalid_argument("lattice needs at least one generator");
    for (const auto& g : generators)
        if (static_cast<int>(g.size()) != dim_)
            throw std::invalid_argument("lattice generators must have length equal to their count");

    basis_ = generators;
    for (int row = 0; row < dim_; ++row) {
        // Euclid on coordinate `row` among columns row..d-1.
        for (;;) {
            int pivot = -1;
            for (int j = row; j < dim_; ++j) {
                if (basis_[j][row] == 0) continue;
                if (pivot < 0 || std::llabs(basis_[j][row]) < std::llabs(basis_[pivot][row])) pivot = j;
            }
            if (pivot < 0) throw std::invalid_argument("singular lattice generators");
            std::swap(basis_[row], basis_[pivot]);
            bool done = true;
            for (int j = row + 1; j < dim_; ++j) {
                if (basis_[j][row] == 0) continue;
                axpy(basis_[j], -floor_div(basis_[j][row], basis_[row][row]), basis_[row]);
                if (basis_[j][row] != 0) done = false;
            }
            if (done) break;
        }
        if (basis_[row][row] < 0)
            for (auto& v : basis_[row]) v = -v;
        for (int j = 0; j < row; ++j)
            axpy(basis_[j], -floor_div(basis_[j][row], basis_[row][row]), basis_[row]);
    }
}

PeriodLattice PeriodLattice::identity(int dim) {
    std::vector<Point> g(dim, Point(dim, 0));
    for (int i = 0; i < dim; ++i) g[i][i] = 1;
    return PeriodLattice(g);
}

PeriodLattice PeriodLattice::diagonal(const Point& sizes) {
    int d = static_cast<int>(sizes.size());
    std::vector<Point> g(d, Point(d, 0));
    for (int i = 0; i < d; ++i) g[i][i] = sizes[i];
    return PeriodLattice(g);
}

int64_t PeriodLattice::index() const {
    int64_t n = 1;
    for (int i = 0; i < dim_; ++i) n *= basis_[i][i];
    return n;
}

Point PeriodLattice::reduce(const Point& x) const {
    if (static_cast<int>(x.size()) != dim_) throw std::invalid_argument("point dimension mismatch");
    Point y = x;
    for (int i = 0; i < dim_; ++i) axpy(y, -floor_div(y[i], basis_[i][i]), basis_[i]);
    return y;
}

bool PeriodLattice::contains(const Point& v) const {
    Point r = reduce(v);
    for (auto c : r)
        if (c != 0) return false;
    return true;
}

bool PeriodLattice::contains(const PeriodLattice& other) const {
    for (const auto& b : other.basis_)
        if (!contains(b)) return false;
    return true;
}

int64_t PeriodLattice::rep_id(const Point& reduced) const {
    int64_t id = 0;
    for (int i = dim_ - 1; i >= 0; --i) id = id * basis_[i][i] + reduced[i];
    return id;
}

Point PeriodLattice::rep(int64_t id) const {
    Point p(dim_);
    for (int i = 0; i < dim_; ++i) {
        p[i] = id % basis_[i][i];
        id /= basis_[i][i];
    }
    return p;
}

std::string PeriodLattice::str() const {
    std::ostringstream os;
    for (int j = 0; j < dim_; ++j) {
        if (j) os << "; ";
        for (int i = 0; i < dim_; ++i) os << (i ? " " : "") << basis_[j][i];
    }
    return os.str();
}

PeriodLattice lattice_canonicalize(const std::vector<Point>& generators) { return PeriodLattice(generators); }

PeriodLattice parse_lattice(const std::string& text) {
    std::vector<Point> rows;
    std::vector<int64_t> flat;
    std::stringstream groups(text);
    std::string group;
    bool has_sep = text.find(';') != std::string::npos;
    while (std::getline(groups, group, ';')) {
        std::istringstream is(group);
        Point row;
        std::string tok;
        while (is >> tok) {
            size_t used = 0;
            int64_t v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("bad lattice entry: " + tok);
            row.push_back(v);
        }
        if (row.empty()) continue;
        if (has_sep) rows.push_back(row);
        else flat = row;
    }
    if (!has_sep) {
        int d = flat.size() == 4 ? 2 : flat.size() == 9 ? 3 : flat.size() == 1 ? 1 : 0;
        if (d == 0) throw std::invalid_argument("lattice needs 4 or 9 integers");
        for (int j = 0; j < d; ++j) rows.emplace_back(flat.begin() + j * d, flat.begin() + (j + 1) * d);
    }
    return PeriodLattice(rows);
}

std::vector<PeriodLattice> enumerate_lattices(int dim, int64_t max_index) {
    std::vector<PeriodLattice> out;
    for (int64_t n = 1; n <= max_index; ++n) {
        // Diagonals with product n, then all reduced below-diagonal entries.
        std::vector<Point> diags;
        Point cur;
        auto split = [&](auto&& self, int64_t rest) -> void {
            if (static_cast<int>(cur.size()) == dim - 1) {
                cur.push_back(rest);
                diags.push_back(cur);
                cur.pop_back();
                return;
            }
            for (int64_t a = 1; a <= rest; ++a) {
                if (rest % a) continue;
                cur.push_back(a);
                self(self, rest / a);
                cur.pop_back();
            }
        };
        split(split, n);
        for (const auto& dg : diags) {
            std::vector<Point> cols(dim, Point(dim, 0));
            for (int i = 0; i < dim; ++i) cols[i][i] = dg[i];
            // Free entries: (row i, column j) with j < i.
            std::vector<std::pair<int, int>> slots;
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < i; ++j) slots.push_back({i, j});
            auto fill = [&](auto&& self, size_t k) -> void {
                if (k == slots.size()) {
                    out.push_back(PeriodLattice(cols));
                    return;
                }
                auto [i, j] = slots[k];
                for (int64_t v = 0; v < dg[i]; ++v) {
                    cols[j][i] = v;
                    self(self, k + 1);
                }
                cols[j][i] = 0;
            };
            fill(fill, 0);
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const PeriodLattice& a, const PeriodLattice& b) {
        if (a.index() != b.index()) return a.index() < b.index();
        return a < b;
    });
    return out;
}

}  // namespace wang
