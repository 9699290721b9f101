#pragma once

namespace enermod {

// Regularized incomplete beta function I_x(a, b), evaluated with the
// Lentz continued fraction (switching to the symmetric tail when x is
// past the convergence midpoint). Accurate to ~1e-14 for the degrees of
// freedom used here.
double incomplete_beta(double a, double b, double x);

// Two-sided p value of a Student-t statistic: I_{df/(df+t^2)}(df/2, 1/2).
double t_two_sided_p(double t, double df);

// Upper-tail p value of an F statistic with (df1, df2) degrees of
// freedom: I_{df2/(df2+df1*f)}(df2/2, df1/2).
double f_upper_p(double f, double df1, double df2);

} // namespace enermod
