#include "ballpark/meb.hpp"

#include <algorithm>
#include <cmath>
#include <list>
#include <numeric>
#include <random>

#include "ballpark/errors.hpp"
#include "ballpark/linalg.hpp"
#include "ballpark/simplex.hpp"

namespace ballpark {

namespace {

// Ball through a support set, tolerant of near-dependent supports: a
// point whose edge vector adds no rank is dropped and the remaining
// ones determine the ball.
Ball support_ball(const std::vector<Point>& pts) {
    if (pts.empty()) return Ball(Point{}, -1.0);  // violated by everything
    std::vector<Point> kept = pts;
    while (kept.size() > 1) {
        try {
            return circumball_of_support(kept);
        } catch (const DegenerateSupport&) {
            std::size_t drop = kept.size() - 1;
            for (std::size_t i = kept.size(); i-- > 0;) {
                std::vector<Point> trial;
                trial.reserve(kept.size() - 1);
                for (std::size_t j = 0; j < kept.size(); ++j)
                    if (j != i) trial.push_back(kept[j]);
                if (affinely_independent(trial)) { drop = i; break; }
            }
            kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(drop));
        }
    }
    return Ball(kept[0], 0.0);
}

bool violates(const Point& p, const Ball& b) {
    if (b.radius < 0.0) return true;
    const double d2 = squared_distance(p, b.center);
    const double r2 = b.radius * b.radius;
    return d2 > r2 + 1e-13 * std::max(1.0, r2);
}

}  // namespace

MebResult minimum_enclosing_ball(const PointSet& points, std::uint64_t seed) {
    const std::size_t n = points.size();
    const std::size_t d = points.dim;
    if (n == 0) throw EmptyInput();

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(idx.begin(), idx.end(), rng);

    std::list<std::size_t> order(idx.begin(), idx.end());
    using It = std::list<std::size_t>::iterator;

    // One frame per recursion level of the move-to-front scheme: scan
    // [list front, end); `pivot` is the element that spawned the child.
    struct Frame {
        It it;
        It end;
        bool child_pending = false;
        It pivot;
    };

    std::vector<std::size_t> support;  // currently forced boundary points
    std::vector<Point> support_pts;
    std::vector<std::size_t> ball_support;  // support used for the current ball
    Ball ball = support_ball(support_pts);
    std::size_t iterations = 1;

    std::vector<Frame> stack;
    stack.push_back({order.begin(), order.end(), false, order.end()});

    const std::size_t step_cap = 50'000'000;
    std::size_t steps = 0;

    while (!stack.empty()) {
        if (++steps > step_cap) throw SearchFailed("enclosing-ball walk did not settle");
        Frame& f = stack.back();

        if (f.child_pending) {
            // Back from the child; un-force the pivot and move it to the
            // front, resuming after its old position. The child's ball
            // stays: it encloses the whole prefix with the pivot on it.
            f.child_pending = false;
            support.pop_back();
            support_pts.pop_back();
            It next = f.pivot;
            ++next;
            order.splice(order.begin(), order, f.pivot);
            f.it = next;
        }

        bool descended = false;
        while (f.it != f.end && support.size() < d + 1) {
            It cur = f.it;
            if (!violates(points[*cur], ball)) {
                ++f.it;
                continue;
            }
            support.push_back(*cur);
            support_pts.push_back(points[*cur]);
            ball = support_ball(support_pts);
            ball_support = support;
            ++iterations;
            f.child_pending = true;
            f.pivot = cur;
            stack.push_back({order.begin(), cur, false, order.end()});
            descended = true;
            break;
        }
        if (!descended) stack.pop_back();
    }

    MebResult out;
    out.ball = ball;
    out.iterations = iterations;
    if (ball.radius < 0.0) {  // cannot happen for n >= 1; keep the guard
        out.ball = Ball(points[0], 0.0);
        out.support = {0};
        return out;
    }
    // Dependent-support handling may have dropped a forced point off the
    // ball; report only the ones actually on the boundary.
    const double r_tol = 1e-9 * std::max(1.0, ball.radius);
    for (std::size_t i : ball_support)
        if (std::abs(distance(points[i], ball.center) - ball.radius) <= r_tol)
            out.support.push_back(i);
    if (out.support.empty()) out.support.push_back(ball_support.empty() ? 0 : ball_support[0]);
    std::sort(out.support.begin(), out.support.end());
    out.support.erase(std::unique(out.support.begin(), out.support.end()), out.support.end());
    return out;
}

namespace {

// Flat branch-and-bound over support subsets. The path keeps an
// incremental Cholesky factor of the Gram matrix of edge vectors, so the
// circumradius of each visited subset costs O(k^2 + kd) and dependent
// extensions are detected from the new diagonal entry. Two facts carry
// the pruning: the circumradius never shrinks along a chain, and any
// enclosing circumball gives an incumbent no superset can beat.
struct OracleState {
    const PointSet* points = nullptr;
    std::size_t n = 0, d = 0;
    std::vector<double> dist2;  // n x n pairwise squared distances

    double best_radius2 = 0.0;  // incumbent (squared)
    double min_enclosing2 = 0.0; // diam^2/4: no smaller ball can enclose
    std::vector<std::size_t> best_support;
    bool have_best = false;
    bool done = false;  // incumbent proven optimal, unwind
    std::size_t balls_computed = 0;
    std::vector<std::vector<std::uint32_t>> candidates;  // per depth

    // Path state, sized for subsets up to d+1 points.
    std::vector<std::size_t> subset;
    std::vector<double> chol;   // (d+1)^2 lower-triangular factor, row-major
    std::vector<double> half;   // forward-substituted right-hand side
    std::vector<double> edges;  // (d+1) x d edge vectors from the base point

    double diam2_value = 0.0;

    double d2(std::size_t i, std::size_t j) const { return dist2[i * n + j]; }

    bool encloses_all(const Point& center, double radius2) const {
        const double limit = radius2 * (1.0 + 1e-10) + 1e-14;
        for (std::size_t i = 0; i < n; ++i)
            if (squared_distance((*points)[i], center) > limit) return false;
        return true;
    }

    Point center_of(std::size_t k) {
        // Back-substitute for alpha, then assemble the center.
        const std::size_t m = k - 1;
        std::vector<double> alpha(m);
        for (std::size_t i = m; i-- > 0;) {
            double s = half[i];
            for (std::size_t j = i + 1; j < m; ++j) s -= chol[j * (d + 1) + i] * alpha[j];
            alpha[i] = s / chol[i * (d + 1) + i];
        }
        Point center = (*points)[subset[0]];
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t c = 0; c < d; ++c) center[c] += alpha[i] * edges[i * d + c];
        return center;
    }

    void extend() {
        const std::size_t k = subset.size();  // current size, adding one more
        for (const std::uint32_t j : candidates[k]) {
            if (done) return;
            subset.push_back(j);
            double radius2 = 0.0;
            bool dependent = false;
            if (k >= 1) {
                // Append edge vector p_j - p_base and extend the factor.
                const std::size_t m = k - 1;  // row index in the factor
                const Point& base = (*points)[subset[0]];
                const Point& pj = (*points)[j];
                for (std::size_t c = 0; c < d; ++c) edges[m * d + c] = pj[c] - base[c];
                double g_mm = 0.0;
                for (std::size_t c = 0; c < d; ++c) g_mm += edges[m * d + c] * edges[m * d + c];
                double* row = &chol[m * (d + 1)];
                double off2 = 0.0;
                for (std::size_t i = 0; i < m; ++i) {
                    double g = 0.0;
                    for (std::size_t c = 0; c < d; ++c) g += edges[i * d + c] * edges[m * d + c];
                    for (std::size_t t = 0; t < i; ++t)
                        g -= chol[i * (d + 1) + t] * row[t];
                    row[i] = g / chol[i * (d + 1) + i];
                    off2 += row[i] * row[i];
                }
                const double diag2 = g_mm - off2;
                if (diag2 <= 1e-18 * std::max(1.0, g_mm)) {
                    dependent = true;  // supersets stay dependent: cut here
                } else {
                    row[m] = std::sqrt(diag2);
                    double h = 0.5 * g_mm;
                    for (std::size_t t = 0; t < m; ++t) h -= row[t] * half[t];
                    half[m] = h / row[m];
                    // radius^2 = alpha . b = |L^-1 b|^2 over the path.
                    radius2 = 0.0;
                    for (std::size_t t = 0; t <= m; ++t) radius2 += half[t] * half[t];
                    ++balls_computed;
                }
            }
            if (!dependent && radius2 < best_radius2 * (1.0 + 1e-12)) {
                const std::size_t size = subset.size();
                bool enclosing = false;
                bool dead = false;
                // Balls below half the set diameter cannot enclose; the
                // center assembly and the point scan are skipped there.
                if (radius2 >= min_enclosing2) {
                    const Point center = size == 1 ? (*points)[subset[0]] : center_of(size);
                    // Descendant circumballs keep this subset on their
                    // sphere, so their centers move orthogonally and
                    // radius_T^2 = radius^2 + |shift|^2; reaching a point
                    // at distance D then needs radius_T >= (D^2 +
                    // radius^2) / (2D). Beyond the incumbent, the branch
                    // is dead.
                    const double r_cut = std::sqrt(best_radius2) * (1.0 + 1e-12);
                    const double reach =
                        r_cut + std::sqrt(std::max(0.0, r_cut * r_cut - radius2));
                    const double reach2 = reach * reach;
                    const double enc_limit = radius2 * (1.0 + 1e-10) + 1e-14;
                    enclosing = true;
                    for (std::size_t q = 0; q < n; ++q) {
                        const double dq2 = squared_distance((*points)[q], center);
                        if (dq2 > reach2) {
                            dead = true;
                            break;
                        }
                        if (dq2 > enc_limit) enclosing = false;
                    }
                    if (!dead && enclosing && (!have_best || radius2 < best_radius2)) {
                        best_radius2 = radius2;
                        best_support = subset;
                        have_best = true;
                        // Nothing can beat a ball at half the diameter.
                        if (best_radius2 <= 0.25 * diam2_value * (1.0 + 1e-11)) done = true;
                    }
                }
                if (!dead && !enclosing && size < d + 1) {
                    // Candidates for the child: points past j that stay
                    // pairwise-compatible with the whole subset (any pair
                    // at distance 2r forces a radius of at least r).
                    auto& child = candidates[size];
                    child.clear();
                    const double wide2 = 4.0 * best_radius2 * (1.0 + 1e-12);
                    const double* row = &dist2[j * n];
                    for (const std::uint32_t i : candidates[k])
                        if (i > j && row[i] < wide2) child.push_back(i);
                    if (!child.empty()) extend();
                }
            }
            subset.pop_back();
        }
    }
};

}  // namespace

MebResult meb_oracle(const PointSet& points) {
    const std::size_t n = points.size();
    const std::size_t d = points.dim;
    if (n == 0) throw EmptyInput();
    if (n > 40 || d > 6)
        throw InstanceTooLarge("oracle enumeration is limited to n <= 40, d <= 6");

    if (n == 1) {
        MebResult out;
        out.ball = Ball(points[0], 0.0);
        out.support = {0};
        out.iterations = 1;
        return out;
    }

    // Enumerate points from the outside in: support points sit far from
    // the centroid, so tight incumbents appear early and the far points
    // also terminate failed enclosure scans quickly.
    Point centroid(d, 0.0);
    for (const Point& p : points.points) axpy(centroid, 1.0, p);
    for (double& c : centroid) c /= static_cast<double>(n);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<double> from_centroid(n);
    for (std::size_t i = 0; i < n; ++i) from_centroid[i] = squared_distance(points[i], centroid);
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return from_centroid[a] > from_centroid[b];
    });
    PointSet reordered;
    reordered.dim = d;
    reordered.points.reserve(n);
    for (std::size_t i : perm) reordered.points.push_back(points[i]);

    OracleState st;
    st.points = &reordered;
    st.n = n;
    st.d = d;
    st.dist2.assign(n * n, 0.0);
    double diam2 = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = squared_distance(reordered[i], reordered[j]);
            st.dist2[i * n + j] = st.dist2[j * n + i] = v;
            diam2 = std::max(diam2, v);
        }
    st.min_enclosing2 = 0.25 * diam2 * (1.0 - 1e-9);
    st.diam2_value = diam2;
    st.best_radius2 = from_centroid[perm.front()];

    st.candidates.assign(d + 2, {});
    for (auto& level : st.candidates) level.reserve(n);
    for (std::size_t i = 0; i < n; ++i) st.candidates[0].push_back(static_cast<std::uint32_t>(i));
    st.subset.reserve(d + 2);
    st.chol.assign((d + 1) * (d + 1), 0.0);
    st.half.assign(d + 1, 0.0);
    st.edges.assign((d + 1) * d, 0.0);
    st.extend();

    if (!st.have_best) throw SearchFailed("oracle found no enclosing support ball");

    MebResult out;
    std::vector<Point> support_pts;
    for (std::size_t i : st.best_support) support_pts.push_back(reordered[i]);
    out.ball = circumball_of_support(support_pts);
    out.support.reserve(st.best_support.size());
    for (std::size_t i : st.best_support) out.support.push_back(perm[i]);
    std::sort(out.support.begin(), out.support.end());
    out.iterations = st.balls_computed;
    return out;
}

EnclosureReport verify_enclosure(const Ball& ball, const PointSet& points,
                                 const Tolerance& tol) {
    if (ball.center.size() != points.dim)
        throw DimensionMismatch("ball and point set live in different dimensions");
    EnclosureReport rep;
    bool first = true;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double v = distance(points[i], ball.center) - ball.radius;
        if (first || v > rep.max_violation) {
            rep.max_violation = v;
            rep.worst_index = i;
            first = false;
        }
    }
    rep.enclosed = rep.max_violation <= tol.rel_eps * std::max(1.0, ball.radius) + tol.abs_eps;
    return rep;
}

}  // namespace ballpark
