#include "branchlaw/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace branchlaw {

namespace {

// QUADPACK dqk15 nodes and weights on [-1, 1] (Kronrod points in decreasing
// order of |x|; even indices are the embedded 7-point Gauss nodes).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
    double a = 0.0, b = 0.0;
    double value = 0.0;
    double error = 0.0;
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double kronrod = kWgk[7] * f(center);
    double gauss = kWg[3] * f(center);
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double fsum = f(center - dx) + f(center + dx);
        kronrod += kWgk[i] * fsum;
        if (i % 2 == 1) gauss += kWg[i / 2] * fsum;
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.value = kronrod * half;
    p.error = std::abs((kronrod - gauss) * half);
    return p;
}

}  // namespace

double pairwise_sum(const double* data, std::size_t count) {
    if (count == 0) return 0.0;
    if (count == 1) return data[0];
    const std::size_t half = count / 2;
    return pairwise_sum(data, half) + pairwise_sum(data + half, count - half);
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureSpec& spec) {
    if (!(b > a)) throw std::invalid_argument("integrate_adaptive: require b > a");
    std::vector<Panel> panels;
    panels.reserve(static_cast<size_t>(spec.max_panels));
    const int n0 = std::max(1, spec.initial_panels);
    for (int i = 0; i < n0; ++i) {
        const double pa = a + (b - a) * i / n0;
        const double pb = a + (b - a) * (i + 1) / n0;
        panels.push_back(evaluate_panel(f, pa, pb));
    }

    auto worst = [&panels]() {
        size_t w = 0;
        for (size_t i = 1; i < panels.size(); ++i) {
            // largest error wins; ties go to the leftmost panel
            if (panels[i].error > panels[w].error ||
                (panels[i].error == panels[w].error && panels[i].a < panels[w].a))
                w = i;
        }
        return w;
    };

    while (true) {
        double total = 0.0, err = 0.0;
        for (const auto& p : panels) {
            total += p.value;
            err += p.error;
        }
        const double target = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
        if (err <= target) break;
        if (static_cast<int>(panels.size()) >= spec.max_panels)
            throw QuadratureError("integrate_adaptive: panel budget exhausted before tolerance");
        const size_t w = worst();
        const Panel split = panels[w];
        const double mid = 0.5 * (split.a + split.b);
        panels[w] = evaluate_panel(f, split.a, mid);
        panels.push_back(evaluate_panel(f, mid, split.b));
    }

    std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    std::vector<double> values(panels.size()), errors(panels.size());
    for (size_t i = 0; i < panels.size(); ++i) {
        values[i] = panels[i].value;
        errors[i] = panels[i].error;
    }
    QuadratureResult r;
    r.value = pairwise_sum(values.data(), values.size());
    r.error_estimate = pairwise_sum(errors.data(), errors.size());
    r.panels = static_cast<int>(panels.size());
    return r;
}

}  // namespace branchlaw
