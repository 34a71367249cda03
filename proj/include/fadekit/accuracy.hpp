#ifndef FADEKIT_ACCURACY_HPP
#define FADEKIT_ACCURACY_HPP

#include "fadekit/errors.hpp"

namespace fadekit {

/// Per-call accuracy budget for series and continued-fraction evaluation.
struct Accuracy {
    double rel_tol = 1e-12;
    long max_terms = 100000;

    void validate() const {
        if (!(rel_tol > 0.0) || rel_tol > 1e-3)
            throw domain_error("Accuracy: rel_tol must lie in (0, 1e-3]");
        if (max_terms < 50)
            throw domain_error("Accuracy: max_terms must be at least 50");
    }
};

} // namespace fadekit

#endif
