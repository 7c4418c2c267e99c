#include "sqbound/bounds.hpp"

#include <cmath>

#include "sqbound/error.hpp"

namespace sqbound {

namespace {

void require(bool condition, const char* message) {
    if (!condition) throw InvalidArgument(message);
}

}  // namespace

double bound_thm1(int n, int diameter) {
    require(n >= 2, "bound_thm1: n must be at least 2");
    require(diameter >= 1, "bound_thm1: diameter must be at least 1");
    return 1.0 / (n * (diameter - 0.25));
}

double bound_thm2(int n, int max_degree, int k) {
    require(k >= 2, "bound_thm2: requires k >= 2");
    require(max_degree >= k, "bound_thm2: requires Delta >= k");
    require(n > max_degree, "bound_thm2: requires n > Delta");
    const double gap = n - max_degree;
    const double k1sq = static_cast<double>(k - 1) * (k - 1);
    return 2.0 * k1sq / (2.0 * gap * (gap + 2.0 * k - 4.0) + (n + 1.0) * k1sq);
}

double bound_eq1(int n, int diameter) {
    require(n >= 2, "bound_eq1: n must be at least 2");
    require(diameter >= 1, "bound_eq1: diameter must be at least 1");
    return 1.0 / (n * (diameter - 0.25));
}

double bound_eq2(int n, int max_degree, int edges, int k) {
    const double irregularity = static_cast<double>(n) * max_degree - 2.0 * edges;
    require(irregularity > 0.0, "bound_eq2: requires an irregular graph (n Delta > 2m)");
    require(k >= 1, "bound_eq2: requires k >= 1");
    const double ksq = static_cast<double>(k) * k;
    const double nn = n;
    return 2.0 * irregularity * ksq / (2.0 * irregularity * (nn * nn - 2.0 * (nn - k)) + nn * ksq);
}

Thresholds thresholds(int n, int max_degree, int diameter) {
    require(n > max_degree, "thresholds: requires n > Delta");
    const double scale = static_cast<double>(n) * (4.0 * diameter - 3.0) - 2.0;
    require(scale > 0.0, "thresholds: requires n(4D-3) > 2");
    const double numerator = static_cast<double>(n - max_degree) * (n + max_degree - 4.0);
    require(numerator > 0.0, "thresholds: nonpositive radicand (n + Delta <= 4)");
    Thresholds out;
    out.hi = 2.0 * std::sqrt(numerator / scale) + 1.0;
    out.lo = 2.0 * (n - max_degree) / std::sqrt(scale) + 1.0;
    return out;
}

double cycle_case_bound(int n) {
    require(n >= 3, "cycle_case_bound: requires n >= 3");
    const double nn = n;
    return 2.0 / (2.0 * nn * nn - 7.0 * nn + 9.0);
}

double lemma1_gap(double a, double b, double x, double y) {
    require(a > 0.0 && b > 0.0, "lemma1_gap: requires a > 0 and b > 0");
    const double d = x - y;
    return a * d * d + b * y * y - a * b * x * x / (a + b);
}

ThresholdVerdict classify_by_thresholds(int n, int max_degree, int diameter, int k) {
    const long long scale = static_cast<long long>(n) * (4LL * diameter - 3) - 2;
    const long long spread = n - max_degree;
    const long long numerator = spread * (n + max_degree - 4LL);
    if (scale <= 0 || spread <= 0 || numerator <= 0 || k < 2) return ThresholdVerdict::undetermined;
    const long long k1sq = static_cast<long long>(k - 1) * (k - 1);
    // k > 2 sqrt(numerator / scale) + 1
    if (k1sq * scale > 4 * numerator) return ThresholdVerdict::eq4_better;
    // k < 2 spread / sqrt(scale) + 1
    if (k1sq * scale < 4 * spread * spread) return ThresholdVerdict::eq3_better;
    return ThresholdVerdict::undetermined;
}

BoundReport bound_report(const BoundContext& ctx) {
    BoundReport report;
    report.eq3 = bound_thm1(ctx.n, ctx.diameter);
    report.eq1 = bound_eq1(ctx.n, ctx.diameter);
    const int k = ctx.connectivity;
    if (k >= 2 && ctx.n > ctx.max_degree && ctx.max_degree >= k) {
        report.eq4 = bound_thm2(ctx.n, ctx.max_degree, k);
    }
    if (static_cast<long long>(ctx.n) * ctx.max_degree > 2LL * ctx.edges && k >= 1) {
        report.eq2 = bound_eq2(ctx.n, ctx.max_degree, ctx.edges, k);
        if (static_cast<double>(k) >= std::sqrt(static_cast<double>(ctx.n))) {
            report.eq2_beats_eq1 = *report.eq2 > report.eq1;
        }
    }
    try {
        report.threshold = thresholds(ctx.n, ctx.max_degree, ctx.diameter);
    } catch (const InvalidArgument&) {
        report.threshold.reset();
    }
    report.dominant = (report.eq4 && *report.eq4 > report.eq3) ? Dominant::eq4 : Dominant::eq3;
    report.verdict = classify_by_thresholds(ctx.n, ctx.max_degree, ctx.diameter, k);
    return report;
}

std::string to_string(Dominant d) { return d == Dominant::eq4 ? "eq4" : "eq3"; }

std::string to_string(ThresholdVerdict v) {
    switch (v) {
        case ThresholdVerdict::eq4_better: return "eq4_better";
        case ThresholdVerdict::eq3_better: return "eq3_better";
        case ThresholdVerdict::undetermined: break;
    }
    return "undetermined";
}

}  // namespace sqbound
