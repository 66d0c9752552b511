#pragma once

#include "hns/features.hpp"

namespace hns {

enum class UpdateMode { simple, smooth };

/// The smooth update has two forms; eq2 keeps the two blend coefficients
/// summing to exactly 1 and is the default. alg1 is the alternative form
/// (0.995 - 0.5/n) * Q + (0.5/n) * F, retained behind this switch for
/// comparison.
enum class SmoothForm { eq2, alg1 };

/// Running-average feature template used as the correlation kernel.
/// n counts accepted updates: n == 1 right after initialization, and each
/// accepted update increments it by exactly 1. The template shape is fixed
/// at initialization.
struct QueryModel {
    FeatureMap tmpl;
    long n = 1;
    double alpha = 0.005;
    UpdateMode mode = UpdateMode::simple;
    SmoothForm form = SmoothForm::eq2;
};

/// Blend weight the simple running average puts on the incoming map.
inline double simple_gain(double alpha) { return alpha; }

/// Blend weight the smooth running average puts on the incoming map when the
/// model has absorbed n maps so far. Exceeds the simple gain by exactly
/// 0.5/n, so the two rules converge as n grows.
inline double smooth_gain(long n, double alpha) { return 0.5 / n + alpha; }

/// Q_1 = F_1: the first feature map becomes the template verbatim.
QueryModel init_query(FeatureMap f1, double alpha, UpdateMode mode,
                      SmoothForm form = SmoothForm::eq2);

/// Simple running average: template <- template*(1-alpha) + alpha*f.
void update_query_simple(QueryModel& q, const FeatureMap& f);

/// Smooth running average: template <- template*(1-g) + g*f with
/// g = smooth_gain(q.n, q.alpha) (or the alg1 form when configured).
void update_query_smooth(QueryModel& q, const FeatureMap& f);

/// Dispatch on q.mode.
void update_query(QueryModel& q, const FeatureMap& f);

}  // namespace hns
