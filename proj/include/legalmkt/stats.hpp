#pragma once

#include <cstddef>
#include <vector>

namespace legalmkt {

// Regularized incomplete gamma functions. gamma_p is the lower tail
// P(a,x), gamma_q the upper tail Q(a,x) = 1 - P(a,x). Series expansion
// for x < a+1, continued fraction otherwise; relative accuracy ~1e-12.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Upper-tail p-value of a chi-square distribution with df degrees of
// freedom, evaluated at x >= 0.
double chi2_sf(double x, double df);

// Standard normal CDF and the two-sided p-value for a z statistic.
double normal_cdf(double z);
double normal_two_sided_p(double z);

// Kahan compensated summation; order-independent up to rounding.
class KahanSum {
public:
    void add(double v) {
        double y = v - comp_;
        double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

double mean(const std::vector<double>& v);
double sample_sd(const std::vector<double>& v);

} // namespace legalmkt
