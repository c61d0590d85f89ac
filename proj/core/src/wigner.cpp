#include "molspin/wigner.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace molspin {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial(int n) {
    BigInt f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

bool triangle_ok(HalfInt j1, HalfInt j2, HalfInt j3) {
    return (j1 + j2 - j3).twice() >= 0 && (j2 + j3 - j1).twice() >= 0 &&
           (j3 + j1 - j2).twice() >= 0;
}

}  // namespace

double wigner3j(HalfInt j1, HalfInt j2, HalfInt j3,
                HalfInt m1, HalfInt m2, HalfInt m3) {
    const HalfInt js[3] = {j1, j2, j3};
    const HalfInt ms[3] = {m1, m2, m3};
    for (int i = 0; i < 3; ++i) {
        if (js[i].twice() < 0) throw std::domain_error("wigner3j: negative j");
        if (ms[i].abs() > js[i]) throw std::domain_error("wigner3j: |m| > j");
        if (!(js[i] + ms[i]).is_integer())
            throw std::domain_error("wigner3j: j+m is not an integer");
    }

    if ((m1 + m2 + m3).twice() != 0) return 0.0;
    if (!(j1 + j2 + j3).is_integer()) return 0.0;
    if (!triangle_ok(j1, j2, j3)) return 0.0;

    // Integer arguments of every factorial in the Racah sum.
    const int a = (j1 + j2 - j3).twice() / 2;   // j1 + j2 - j3
    const int b = (j1 - j2 + j3).twice() / 2;
    const int c = (-j1 + j2 + j3).twice() / 2;
    const int perim = (j1 + j2 + j3).twice() / 2;
    const int j1pm1 = (j1 + m1).twice() / 2;
    const int j1mm1 = (j1 - m1).twice() / 2;
    const int j2pm2 = (j2 + m2).twice() / 2;
    const int j2mm2 = (j2 - m2).twice() / 2;
    const int j3pm3 = (j3 + m3).twice() / 2;
    const int j3mm3 = (j3 - m3).twice() / 2;
    const int k1 = (j3 - j2 + m1).twice() / 2;  // enters as t + k1
    const int k2 = (j3 - j1 - m2).twice() / 2;  // enters as t + k2

    const int t_min = std::max({0, -k1, -k2});
    const int t_max = std::min({a, j1mm1, j2pm2});
    if (t_min > t_max) return 0.0;

    BigRat sum = 0;
    for (int t = t_min; t <= t_max; ++t) {
        BigInt denom = factorial(t) * factorial(t + k1) * factorial(t + k2) *
                       factorial(a - t) * factorial(j1mm1 - t) * factorial(j2pm2 - t);
        BigRat term(1, denom);
        sum += (t % 2 == 0) ? term : -term;
    }
    if (sum == 0) return 0.0;

    BigRat prefactor2(factorial(a) * factorial(b) * factorial(c), factorial(perim + 1));
    prefactor2 *= BigRat(factorial(j1pm1) * factorial(j1mm1) * factorial(j2pm2) *
                         factorial(j2mm2) * factorial(j3pm3) * factorial(j3mm3));

    // value^2 = sum^2 * prefactor2, exact; one conversion at the end.
    const BigRat value2 = sum * sum * prefactor2;
    double value = std::sqrt(value2.convert_to<double>());
    if (sum < 0) value = -value;

    const int phase = (j1 - j2 - m3).twice() / 2;
    if (phase % 2 != 0) value = -value;
    return value;
}

double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                      HalfInt J, HalfInt M) {
    if ((m1 + m2 - M).twice() != 0) return 0.0;
    const int phase = (j1 - j2 + M).twice() / 2;
    double sign = (phase % 2 == 0) ? 1.0 : -1.0;
    return sign * std::sqrt(J.twice() + 1.0) * wigner3j(j1, j2, J, m1, m2, -M);
}

double rotor_tensor_element(int Np, int Mp, int k, int q, int N, int M) {
    if (Np < 0 || N < 0) throw std::domain_error("rotor_tensor_element: negative N");
    if (std::abs(Mp) > Np || std::abs(M) > N) return 0.0;
    if (Mp != M + q) return 0.0;
    double value = std::sqrt((2.0 * Np + 1.0) * (2.0 * N + 1.0)) *
                   wigner3j(Np, k, N, 0, 0, 0) *
                   wigner3j(Np, k, N, -Mp, q, M);
    return (Mp % 2 == 0) ? value : -value;
}

double spin_vector_element(HalfInt j, HalfInt mp, int q, HalfInt m) {
    if (m.abs() > j || mp.abs() > j) return 0.0;
    const double jj = j.value();
    const double mm = m.value();
    switch (q) {
        case 0:
            return (mp == m) ? mm : 0.0;
        case +1:
            if ((mp - m).twice() != 2) return 0.0;
            return -std::sqrt((jj * (jj + 1.0) - mm * (mm + 1.0)) * 0.5);
        case -1:
            if ((mp - m).twice() != -2) return 0.0;
            return std::sqrt((jj * (jj + 1.0) - mm * (mm - 1.0)) * 0.5);
        default:
            throw std::domain_error("spin_vector_element: q must be -1, 0, +1");
    }
}

double coupled_rank2_element(HalfInt j1, HalfInt m1p, HalfInt m1,
                             HalfInt j2, HalfInt m2p, HalfInt m2, int q) {
    double total = 0.0;
    for (int q1 = -1; q1 <= 1; ++q1) {
        const int q2 = q - q1;
        if (q2 < -1 || q2 > 1) continue;
        const double cg = clebsch_gordan(HalfInt(1), HalfInt(q1),
                                         HalfInt(1), HalfInt(q2),
                                         HalfInt(2), HalfInt(q));
        if (cg == 0.0) continue;
        total += cg * spin_vector_element(j1, m1p, q1, m1) *
                 spin_vector_element(j2, m2p, q2, m2);
    }
    return total;
}

}  // namespace molspin
