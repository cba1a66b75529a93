#include "qforms/errors.hpp"

namespace qforms {

const char * to_string(Violation v)
{
    switch (v) {
    case Violation::not_prime: return "not_prime";
    case Violation::even_prime: return "even_prime";
    case Violation::equal_primes: return "equal_primes";
    case Violation::divides_n: return "divides_n";
    case Violation::divides_poly_discriminant: return "divides_poly_discriminant";
    case Violation::nonpositive_n: return "nonpositive_n";
    }
    return "unknown";
}

} // namespace qforms
