#include "wavedecay/norms.hpp"

#include <cmath>

#include "wavedecay/errors.hpp"

namespace wavedecay {

namespace {

constexpr double kFourPi = 4.0 * 3.14159265358979323846;

inline double jap(double x) { return std::sqrt(1.0 + x * x); }

int annulus_of(double r) {
    // base-2 annuli <r> in [2^k, 2^(k+1))
    return static_cast<int>(std::floor(std::log2(jap(r))));
}

}  // namespace

std::string norm_name(NormKind k) {
    switch (k) {
        case NormKind::le: return "LE";
        case NormKind::le1: return "LE1";
        case NormKind::lestar: return "LEstar";
        case NormKind::region_sup: return "RegionSup";
    }
    return "?";
}

NormReport weighted_dyadic_norm(const Trajectory& traj, NormKind kind, double t0, double t1) {
    if (kind == NormKind::region_sup)
        throw Error(Errc::domain_error, "region_sup is not an interval norm");
    if (t0 < traj.times.front() - 1e-9 || t1 > traj.times.back() + 1e-9 || t1 < t0)
        throw Error(Errc::domain_error, "norm interval outside the recorded span");

    const double dr = traj.dr();
    const double dt = traj.snap_dt();
    const int n_ann = annulus_of(traj.r(traj.n_points() - 1)) + 1;
    std::vector<double> low(n_ann, 0.0);   // <r>^(-1/2)-weighted u^2
    std::vector<double> high(n_ann, 0.0);  // <r>^(+1/2)-weighted u^2
    std::vector<double> grad(n_ann, 0.0);  // <r>^(-1/2)-weighted |grad u|^2
    std::vector<double> lowu(n_ann, 0.0);  // <r>^(-1/2)-weighted (<r>^-1 u)^2

    for (int i = 0; i < traj.n_snaps(); ++i) {
        if (traj.times[i] < t0 - 1e-9 || traj.times[i] > t1 + 1e-9) continue;
        for (int j = 1; j < traj.n_points() - 1; ++j) {
            double r = traj.r(j);
            double w = jap(r);
            double u2 = traj.phi[i][j] * traj.phi[i][j];
            double phi_r = (traj.phi[i][j + 1] - traj.phi[i][j - 1]) / (2.0 * dr);
            double g2 = traj.pi[i][j] * traj.pi[i][j] + phi_r * phi_r;
            double cell = kFourPi * r * r * dr * dt;
            int a = annulus_of(r);
            low[a] += u2 / w * cell;
            high[a] += u2 * w * cell;
            grad[a] += g2 / w * cell;
            lowu[a] += u2 / (w * w * w) * cell;
        }
    }

    NormReport rep;
    rep.kind = kind;
    rep.descriptor = "[" + std::to_string(t0) + "," + std::to_string(t1) + "]";
    switch (kind) {
        case NormKind::le: {
            double sup = 0.0;
            for (double v : low) sup = std::max(sup, v);
            rep.value = std::sqrt(sup);
            break;
        }
        case NormKind::lestar: {
            double sum = 0.0;
            for (double v : high) sum += std::sqrt(v);
            rep.value = sum;
            break;
        }
        case NormKind::le1: {
            double sup_g = 0.0, sup_l = 0.0;
            for (double v : grad) sup_g = std::max(sup_g, v);
            for (double v : lowu) sup_l = std::max(sup_l, v);
            rep.value = std::sqrt(sup_g) + std::sqrt(sup_l);
            break;
        }
        default: break;
    }
    return rep;
}

NormReport region_sup(const Trajectory& traj, const DyadicRegionSpec& region,
                      const VFWord& word) {
    if (word.size() > 2)
        throw Error(Errc::domain_error, "region sup words are limited to two letters");
    FieldEval ev(traj, word);
    double sup = 0.0;
    bool hit = false;
    for (int i = ev.snap_margin(); i < traj.n_snaps() - ev.snap_margin(); ++i) {
        double t = traj.times[i];
        for (int j = ev.cell_margin(); j < traj.n_points() - ev.cell_margin(); ++j) {
            if (!region.contains(t, traj.r(j))) continue;
            hit = true;
            sup = std::max(sup, std::abs(ev.at(i, j)));
        }
    }
    if (!hit)
        throw Error(Errc::empty_region, "region misses the recorded grid: " + region.str());
    NormReport rep;
    rep.kind = NormKind::region_sup;
    rep.value = sup;
    rep.descriptor = region.str() + " word=" + word_name(word);
    return rep;
}

std::vector<std::pair<double, double>> energy_history(const Trajectory& traj, int order) {
    if (order < 0 || order > 2)
        throw Error(Errc::domain_error, "energy history supports orders 0..2");

    // words up to the requested number of vector fields
    std::vector<VFWord> words{{}};
    if (order >= 1)
        for (auto v : {VectorField::dt, VectorField::dr, VectorField::scaling})
            words.push_back({v});
    if (order >= 2)
        for (auto v : {VectorField::dt, VectorField::dr, VectorField::scaling})
            for (auto w : {VectorField::dt, VectorField::dr, VectorField::scaling})
                words.push_back({v, w});

    const double dr = traj.dr();
    const double dt = traj.snap_dt();
    const int n_ann = annulus_of(traj.r(traj.n_points() - 1)) + 1;

    // evaluators for each word and its gradient pieces
    struct Piece {
        FieldEval field;
        FieldEval d_t;
        FieldEval d_r;
    };
    std::vector<Piece> pieces;
    int margin_snap = 0, margin_cell = 0;
    for (const auto& w : words) {
        VFWord wt{VectorField::dt}, wr{VectorField::dr};
        wt.insert(wt.end(), w.begin(), w.end());
        wr.insert(wr.end(), w.begin(), w.end());
        if (wt.size() > 2) continue;  // gradient of second-order words exceeds the cap
        pieces.push_back({FieldEval(traj, w), FieldEval(traj, wt), FieldEval(traj, wr)});
        margin_snap = std::max({margin_snap, pieces.back().d_t.snap_margin(),
                                pieces.back().d_r.snap_margin(),
                                pieces.back().field.snap_margin()});
        margin_cell = std::max({margin_cell, pieces.back().d_t.cell_margin(),
                                pieces.back().d_r.cell_margin(),
                                pieces.back().field.cell_margin()});
    }
    if (order == 2) {
        // second-order fields enter the LE^1 piece through their own value
        for (const auto& w : words)
            if (w.size() == 2) {
                pieces.push_back({FieldEval(traj, w), FieldEval(traj, w), FieldEval(traj, w)});
                margin_snap = std::max(margin_snap, pieces.back().field.snap_margin());
                margin_cell = std::max(margin_cell, pieces.back().field.cell_margin());
            }
    }

    std::vector<std::pair<double, double>> history;
    std::vector<double> grad_acc(n_ann, 0.0), low_acc(n_ann, 0.0);
    double running_max = 0.0;
    for (int i = 0; i < traj.n_snaps(); ++i) {
        bool interior_snap = i >= margin_snap && i < traj.n_snaps() - margin_snap;
        double l2 = 0.0;
        for (int j = 1; j < traj.n_points() - 1; ++j) {
            double r = traj.r(j);
            double w = jap(r);
            double cell = kFourPi * r * r * dr;
            double g2 = 0.0, u2 = 0.0;
            bool interior_cell = j >= margin_cell && j < traj.n_points() - margin_cell;
            if (interior_snap && interior_cell) {
                for (std::size_t p = 0; p < pieces.size(); ++p) {
                    double gt = pieces[p].d_t.at(i, j);
                    double gr = pieces[p].d_r.at(i, j);
                    double uu = pieces[p].field.at(i, j);
                    g2 += gt * gt + gr * gr;
                    u2 += uu * uu;
                }
            } else {
                // margin points: base field only (stencils starve there)
                double gt = traj.pi[i][j];
                double gr = (traj.phi[i][j + 1] - traj.phi[i][j - 1]) / (2.0 * dr);
                g2 = gt * gt + gr * gr;
                u2 = traj.phi[i][j] * traj.phi[i][j];
            }
            l2 += g2 * cell;
            int a = annulus_of(r);
            grad_acc[a] += g2 / w * cell * dt;
            low_acc[a] += u2 / (w * w * w) * cell * dt;
        }
        running_max = std::max(running_max, std::sqrt(l2));
        double sup_g = 0.0, sup_l = 0.0;
        for (double v : grad_acc) sup_g = std::max(sup_g, v);
        for (double v : low_acc) sup_l = std::max(sup_l, v);
        history.emplace_back(traj.times[i], running_max + std::sqrt(sup_g) + std::sqrt(sup_l));
    }
    return history;
}

}  // namespace wavedecay
