#ifndef SDFC_ANALYSIS_HYPERPLANE_HPP
#define SDFC_ANALYSIS_HYPERPLANE_HPP

#include "sdfc/numerics/logistic.hpp"

#include <span>

namespace sdfc {

// L1 logistic hyperplane separating activity vectors by binary label, with the
// default penalty. Throws DegenerateFitError on a single-class set.
LogisticModel fit_hyperplane(const Matrix& acts, std::span<const int> labels);

// Accuracy on (new_acts, new_labels) of the hyperplane fit on the old set.
double hyperplane_alignment(const Matrix& old_acts, std::span<const int> old_labels, const Matrix& new_acts,
                            std::span<const int> new_labels);

// Normalised movement toward a hyperplane. Row k of `start` and `end` is the
// same sample before and after later learning; `normal` is a unit normal
// oriented toward class 1. Per-sample movement toward the boundary
// ((-1)^c times the projected displacement, clipped at 0) is averaged within
// each class, then across classes, and divided by half the mean absolute
// displacement over all coordinates. Zero displacement gives 0.
double movement_toward_hyperplane(const Matrix& start, const Matrix& end, std::span<const int> labels,
                                  const Vector& normal);

} // namespace sdfc

#endif // SDFC_ANALYSIS_HYPERPLANE_HPP
