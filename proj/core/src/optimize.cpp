#include "pntsi/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace pntsi {

namespace {

using Point = std::array<double, 4>;  // (m, kappa1, kappa2, kappa3)

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Feasibility {
    double x;        // 0 when the objective has no x (limit)
    bool needs_x;

    bool ok(const Point& p) const {
        const auto [m, k1, k2, k3] = p;
        if (!(m > 1.0)) return false;
        if (!(k1 >= 1.0 && k1 <= 3.0 && k1 <= k2)) return false;
        if (!(k3 >= 2.0)) return false;
        if (needs_x && !(k3 < std::log(x))) return false;
        return true;
    }
};

/// Fold a coordinate back into [lo, hi] by mirror reflection.
double reflect_into(double v, double lo, double hi) {
    const double w = hi - lo;
    if (w <= 0.0) return lo;
    double t = std::fmod(v - lo, 2.0 * w);
    if (t < 0.0) t += 2.0 * w;
    return t <= w ? lo + t : hi - (t - w);
}

Point clamp_to_box(Point p, const SearchBox& box) {
    for (int i = 0; i < 4; ++i) p[i] = reflect_into(p[i], box.lo[i], box.hi[i]);
    return p;
}

class Search {
public:
    Search(const ObjectiveSpec& objective, const SearchConfig& config)
        : obj_(objective), cfg_(config) {
        feas_.needs_x = objective.kind != Objective::psi2_limit;
        feas_.x = objective.x;
    }

    OptimizeResult run() {
        check_box_feasible();
        std::mt19937_64 rng(cfg_.seed);
        const int starts = std::max(1, cfg_.starts);
        const int share = std::max(8, cfg_.budget / starts);
        std::vector<Point> start_points = latin_hypercube(starts, rng);

        OptimizeResult out;
        out.best_value = kInf;
        for (int s = 0; s < starts; ++s) {
            start_index_ = s;
            evals_left_ = share;
            nelder_mead(start_points[s]);
        }
        // deterministic reduction over the full trace, in start order
        for (const Evaluation& e : trace_) {
            if (better(e, out)) {
                out.best_value = e.value;
                out.best_params = to_params(e.point);
            }
        }
        if (!std::isfinite(out.best_value))
            throw window_error("infeasible box: no feasible point was evaluated");
        out.trace = std::move(trace_);
        return out;
    }

private:
    BoundParams to_params(const Point& p) const {
        BoundParams bp;
        bp.x0 = obj_.x;
        bp.eps = obj_.eps;
        bp.m = p[0];
        bp.kappa1 = p[1];
        bp.kappa2 = p[2];
        bp.kappa3 = p[3];
        return bp;
    }

    bool better(const Evaluation& e, const OptimizeResult& cur) const {
        if (e.value < cur.best_value) return true;
        if (e.value > cur.best_value) return false;
        if (e.point[2] != cur.best_params.kappa2) return e.point[2] < cur.best_params.kappa2;
        return e.point[0] < cur.best_params.m;
    }

    void check_box_feasible() const {
        // the box is axis-aligned, so feasibility of the "most permissive"
        // corner (smallest kappa1, largest kappa2, smallest kappa3) decides
        Point corner{std::max(cfg_.box.lo[0], std::nextafter(1.0, 2.0)), cfg_.box.lo[1],
                     cfg_.box.hi[2], cfg_.box.lo[3]};
        for (int i = 0; i < 4; ++i)
            if (cfg_.box.lo[i] > cfg_.box.hi[i]) throw window_error("infeasible box: lo > hi");
        if (!feas_.ok(clamp_to_box(corner, cfg_.box)))
            throw window_error("infeasible box: no parameter point satisfies the invariants");
    }

    std::vector<Point> latin_hypercube(int n, std::mt19937_64& rng) {
        std::vector<Point> pts(n);
        for (int d = 0; d < 4; ++d) {
            std::vector<int> strata(n);
            for (int i = 0; i < n; ++i) strata[i] = i;
            std::shuffle(strata.begin(), strata.end(), rng);
            std::uniform_real_distribution<double> unif(0.0, 1.0);
            for (int i = 0; i < n; ++i) {
                const double u = (strata[i] + unif(rng)) / n;
                pts[i][d] = cfg_.box.lo[d] + u * (cfg_.box.hi[d] - cfg_.box.lo[d]);
            }
        }
        return pts;
    }

    double objective_value(const Point& p) {
        switch (obj_.kind) {
            case Objective::psi2_at_x:
                return psi2({obj_.x, obj_.eps, p[0], p[1], p[2], p[3]});
            case Objective::psi2_limit:
                return psi2_limit(p[0], p[1], p[2], p[3]);
            case Objective::psi3_at_x:
                return psi3(obj_.x, p[0], p[1], p[2], p[3]);
        }
        return kInf;
    }

    /// Rejected points cost nothing: no objective call, no budget.
    double evaluate(Point p) {
        p = clamp_to_box(p, cfg_.box);
        if (!feas_.ok(p)) return kInf;
        if (evals_left_ <= 0) return kInf;
        --evals_left_;
        const double v = objective_value(p);
        trace_.push_back({start_index_, p, v});
        return v;
    }

    void nelder_mead(const Point& origin) {
        constexpr double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
        struct Vertex {
            Point x;
            double f;
        };
        std::array<Vertex, 5> simplex;
        simplex[0] = {origin, evaluate(origin)};
        for (int i = 0; i < 4; ++i) {
            Point p = origin;
            p[i] += 0.15 * (cfg_.box.hi[i] - cfg_.box.lo[i]);
            simplex[i + 1] = {p, evaluate(p)};
        }

        while (evals_left_ > 0) {
            std::sort(simplex.begin(), simplex.end(),
                      [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
            // converged enough for a cheap smooth objective
            if (simplex[4].f - simplex[0].f < 1e-12) break;

            Point centroid{};
            for (int i = 0; i < 4; ++i) {
                double c = 0.0;
                for (int j = 0; j < 4; ++j) c += simplex[j].x[i];
                centroid[i] = c / 4.0;
            }
            auto along = [&](double coef) {
                Point p;
                for (int i = 0; i < 4; ++i)
                    p[i] = centroid[i] + coef * (centroid[i] - simplex[4].x[i]);
                return p;
            };

            Point xr = along(alpha);
            double fr = evaluate(xr);
            if (fr < simplex[0].f) {
                Point xe = along(gamma);
                double fe = evaluate(xe);
                simplex[4] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
                continue;
            }
            if (fr < simplex[3].f) {
                simplex[4] = {xr, fr};
                continue;
            }
            Point xc = along(-rho);
            double fc = evaluate(xc);
            if (fc < simplex[4].f) {
                simplex[4] = {xc, fc};
                continue;
            }
            for (int j = 1; j <= 4; ++j) {  // shrink toward the best vertex
                for (int i = 0; i < 4; ++i)
                    simplex[j].x[i] =
                        simplex[0].x[i] + sigma * (simplex[j].x[i] - simplex[0].x[i]);
                simplex[j].f = evaluate(simplex[j].x);
            }
        }
    }

    ObjectiveSpec obj_;
    SearchConfig cfg_;
    Feasibility feas_;
    std::vector<Evaluation> trace_;
    int start_index_ = 0;
    int evals_left_ = 0;
};

}  // namespace

OptimizeResult optimize(const ObjectiveSpec& objective, const SearchConfig& config) {
    if (config.budget < 500) throw std::invalid_argument("optimize: budget must be >= 500");
    return Search(objective, config).run();
}

}  // namespace pntsi
