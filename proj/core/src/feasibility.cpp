#include "plogic/feasibility.hpp"

#include "plogic/errors.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace plogic {

RationalState make_rational_state(const Diagram& d, std::vector<Rat> values) {
    if (values.size() != d.atoms.size())
        fail(Errc::bad_state, "state has " + std::to_string(values.size()) + " values for " +
                                  std::to_string(d.atoms.size()) + " atoms");
    for (std::size_t a = 0; a < values.size(); ++a)
        if (values[a] < 0)
            fail(Errc::bad_state, "negative value on atom '" + d.atoms[a] + "'");
    for (const auto& block : d.blocks) {
        Rat sum = 0;
        for (int a : block) sum += values[a];
        if (sum != 1) fail(Errc::bad_state, "block values sum to " + rat_to_string(sum));
    }
    return RationalState{std::move(values)};
}

namespace {

// Phase-1 simplex on A w = b, w >= 0 with Bland's pivoting rule. Columns are
// the r original variables followed by one artificial per row; the reduced
// cost row is kept alongside. Terminates with either a basic feasible w or
// the Farkas dual y (y A <= 0, y b > 0) read off the artificial columns.
struct Phase1 {
    std::size_t rows, cols;  // cols counts original + artificial columns
    std::size_t originals;
    std::vector<std::vector<Rat>> tab;  // rows x (cols + 1), last column is rhs
    std::vector<Rat> obj;               // cols + 1, last entry is -objective
    std::vector<std::size_t> basis;

    Phase1(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b)
        : rows(a.size()), cols(a.empty() ? 0 : a[0].size() + a.size()),
          originals(a.empty() ? 0 : a[0].size()) {
        tab.assign(rows, std::vector<Rat>(cols + 1, Rat(0)));
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < originals; ++j) tab[i][j] = a[i][j];
            tab[i][originals + i] = 1;
            tab[i][cols] = b[i];
        }
        basis.resize(rows);
        for (std::size_t i = 0; i < rows; ++i) basis[i] = originals + i;
        obj.assign(cols + 1, Rat(0));
        for (std::size_t j = 0; j < originals; ++j)
            for (std::size_t i = 0; i < rows; ++i) obj[j] -= tab[i][j];
        for (std::size_t i = 0; i < rows; ++i) obj[cols] -= tab[i][cols];
    }

    void pivot(std::size_t leave, std::size_t enter) {
        Rat p = tab[leave][enter];
        for (auto& v : tab[leave]) v /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || tab[i][enter] == 0) continue;
            Rat f = tab[i][enter];
            for (std::size_t j = 0; j <= cols; ++j) tab[i][j] -= f * tab[leave][j];
        }
        if (obj[enter] != 0) {
            Rat f = obj[enter];
            for (std::size_t j = 0; j <= cols; ++j) obj[j] -= f * tab[leave][j];
        }
        basis[leave] = enter;
    }

    void solve() {
        for (;;) {
            std::size_t enter = cols;
            for (std::size_t j = 0; j < cols; ++j)
                if (obj[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == cols) return;
            std::size_t leave = rows;
            Rat best_ratio;
            for (std::size_t i = 0; i < rows; ++i) {
                if (tab[i][enter] <= 0) continue;
                Rat ratio = tab[i][cols] / tab[i][enter];
                if (leave == rows || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == rows) throw std::logic_error("phase-1 objective unbounded");
            pivot(leave, enter);
        }
    }

    Rat objective() const { return -obj[cols]; }
};

}  // namespace

FeasibilityResult convex_membership(const RationalState& target,
                                    const std::vector<TwoValuedState>& states) {
    const std::size_t atoms = target.values.size();
    for (const auto& s : states)
        if (s.size() != atoms)
            fail(Errc::dimension_mismatch, "state and target range over different atoms");

    // Rows: one per atom plus the weight normalization; flip rows with a
    // negative right-hand side so phase 1 starts feasible.
    const std::size_t rows = atoms + 1;
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(states.size(), Rat(0)));
    std::vector<Rat> b(rows);
    std::vector<int> sign(rows, 1);
    for (std::size_t i = 0; i < atoms; ++i) {
        for (std::size_t k = 0; k < states.size(); ++k) a[i][k] = int(states[k][i]);
        b[i] = target.values[i];
    }
    for (std::size_t k = 0; k < states.size(); ++k) a[rows - 1][k] = 1;
    b[rows - 1] = 1;
    for (std::size_t i = 0; i < rows; ++i) {
        if (b[i] < 0) {
            sign[i] = -1;
            b[i] = -b[i];
            for (auto& v : a[i]) v = -v;
        }
    }

    Phase1 simplex(a, b);
    simplex.solve();

    if (simplex.objective() == 0) {
        ConvexWeights result;
        result.weights.assign(states.size(), Rat(0));
        for (std::size_t i = 0; i < rows; ++i)
            if (simplex.basis[i] < states.size())
                result.weights[simplex.basis[i]] = simplex.tab[i][simplex.cols];
        // exact substitution check before handing the weights out
        Rat total = 0;
        for (const auto& w : result.weights) {
            if (w < 0) throw std::logic_error("negative weight from simplex");
            total += w;
        }
        if (total != 1) throw std::logic_error("weights do not sum to 1");
        for (std::size_t i = 0; i < atoms; ++i) {
            Rat value = 0;
            for (std::size_t k = 0; k < states.size(); ++k)
                if (states[k][i]) value += result.weights[k];
            if (value != target.values[i])
                throw std::logic_error("weights fail to reproduce the target");
        }
        return result;
    }

    // Farkas dual: y_i = 1 - reduced cost of artificial i, undoing row flips.
    SeparatingCertificate cert;
    std::vector<Rat> dual(rows);
    for (std::size_t i = 0; i < rows; ++i)
        dual[i] = (Rat(1) - simplex.obj[states.size() + i]) * sign[i];
    cert.coeffs.assign(dual.begin(), dual.begin() + atoms);
    cert.bound = -dual[rows - 1];
    for (std::size_t k = 0; k < states.size(); ++k) {
        Rat lhs = 0;
        for (std::size_t i = 0; i < atoms; ++i)
            if (states[k][i]) lhs += cert.coeffs[i];
        if (!(lhs <= cert.bound)) throw std::logic_error("certificate fails on a state");
    }
    Rat lhs = 0;
    for (std::size_t i = 0; i < atoms; ++i) lhs += cert.coeffs[i] * target.values[i];
    if (!(lhs > cert.bound)) throw std::logic_error("certificate fails on the target");
    return cert;
}

}  // namespace plogic
