#ifndef VMR_COUNTEREXAMPLE_HPP
#define VMR_COUNTEREXAMPLE_HPP

#include <string>
#include <vector>

#include "vmr/vector_measure.hpp"

namespace vmr {

struct CertCheck {
    std::string name;
    bool passed = false;
    double margin = 0.0; // slack by which the check holds (negative = failed)
    std::string detail;
};

struct CertificateReport {
    std::vector<CertCheck> checks;
    bool all_passed = false;
    const CertCheck* first_failure() const;
};

/// Certifies numerically that the built-in three-dimensional instance admits
/// no maximal subset for p = (1/2, 1/2, 1/2): both witness sets reach p, the
/// probe vectors q1/q2 are reached inside them, and each q is excluded from
/// the other witness's range via a two-dimensional coordinate-pair
/// projection (a point below the lower boundary of a projected range cannot
/// be in the full range).
CertificateReport certify_counterexample();

/// Same battery of checks on a caller-supplied three-dimensional measure;
/// used to show the certificate degrades on perturbed instances.
CertificateReport evaluate_counterexample_checks(const VectorMeasure& nu);

} // namespace vmr

#endif
