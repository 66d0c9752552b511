#include "hns/query_model.hpp"

namespace hns {

namespace {

void blend(FeatureMap& tmpl, const FeatureMap& f, double keep, double gain) {
    const std::size_t n = tmpl.data.size();
    for (std::size_t i = 0; i < n; ++i)
        tmpl.data[i] = tmpl.data[i] * keep + gain * f.data[i];
}

void require_shape(const QueryModel& q, const FeatureMap& f) {
    if (!q.tmpl.same_shape(f))
        throw ShapeError("query update: feature map shape differs from template");
}

}  // namespace

QueryModel init_query(FeatureMap f1, double alpha, UpdateMode mode, SmoothForm form) {
    QueryModel q;
    q.tmpl = std::move(f1);
    q.n = 1;
    q.alpha = alpha;
    q.mode = mode;
    q.form = form;
    return q;
}

void update_query_simple(QueryModel& q, const FeatureMap& f) {
    require_shape(q, f);
    const double g = simple_gain(q.alpha);
    blend(q.tmpl, f, 1.0 - g, g);
    q.n += 1;
}

void update_query_smooth(QueryModel& q, const FeatureMap& f) {
    require_shape(q, f);
    if (q.form == SmoothForm::alg1) {
        // literal alternative form; coefficients do not sum to 1
        blend(q.tmpl, f, 0.995 - 0.5 / q.n, 0.5 / q.n);
    } else {
        const double g = smooth_gain(q.n, q.alpha);
        blend(q.tmpl, f, 1.0 - g, g);
    }
    q.n += 1;
}

void update_query(QueryModel& q, const FeatureMap& f) {
    if (q.mode == UpdateMode::smooth)
        update_query_smooth(q, f);
    else
        update_query_simple(q, f);
}

}  // namespace hns
