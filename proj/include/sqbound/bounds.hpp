#pragma once

#include <optional>
#include <string>
#include <utility>

#include "sqbound/bound_context.hpp"

namespace sqbound {

// Lower bounds on 2*Delta - q(H) for a maximal proper subgraph H of a regular
// graph G, and the two classical bounds on 2*Delta - q(G) for irregular G.
// All of them throw InvalidArgument outside their hypotheses.

// 1 / (n (D - 1/4)). Requires n >= 2, D >= 1.
double bound_thm1(int n, int diameter);

// 2(k-1)^2 / (2(n-Delta)(n-Delta+2k-4) + (n+1)(k-1)^2). Requires k >= 2 and
// n > Delta >= k.
double bound_thm2(int n, int max_degree, int k);

// Same expression as bound_thm1, but for a connected irregular graph itself.
double bound_eq1(int n, int diameter);

// 2(n Delta - 2m) k^2 / (2(n Delta - 2m)[n^2 - 2(n-k)] + n k^2).
// Requires n Delta > 2m (irregular) and k >= 1.
double bound_eq2(int n, int max_degree, int edges, int k);

struct Thresholds {
    double hi = 0.0;  // k above this: bound_thm2 beats bound_thm1
    double lo = 0.0;  // k below this: bound_thm1 beats bound_thm2
};

// Requires n > Delta and positive radicands.
Thresholds thresholds(int n, int max_degree, int diameter);

// 2 / (2n^2 - 7n + 9), the path-versus-cycle bound. Requires n >= 3.
double cycle_case_bound(int n);

// a(x-y)^2 + b y^2 - a b x^2 / (a+b). Nonnegative; zero iff y = a x / (a+b).
double lemma1_gap(double a, double b, double x, double y);

enum class Dominant { eq3, eq4 };

// Which bound the threshold rule predicts, decided in exact integer arithmetic
// so integer k sitting exactly on a threshold is never misclassified.
enum class ThresholdVerdict { eq4_better, eq3_better, undetermined };

ThresholdVerdict classify_by_thresholds(int n, int max_degree, int diameter, int k);

struct BoundReport {
    double eq3 = 0.0;
    std::optional<double> eq4;  // needs k >= 2
    double eq1 = 0.0;
    std::optional<double> eq2;  // needs an irregular context
    std::optional<Thresholds> threshold;
    Dominant dominant = Dominant::eq3;
    ThresholdVerdict verdict = ThresholdVerdict::undetermined;
    // Only when eq2 is present and k >= sqrt(n): whether eq2 > eq1 held.
    std::optional<bool> eq2_beats_eq1;
};

BoundReport bound_report(const BoundContext& ctx);

std::string to_string(Dominant d);
std::string to_string(ThresholdVerdict v);

}  // namespace sqbound
