#ifndef ASPECTRA_REPORTS_HPP
#define ASPECTRA_REPORTS_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "aspectra/polynomial.hpp"
#include "aspectra/rational.hpp"

namespace aspectra {

// Coefficients as exact "num/den" strings, lowest degree first.
nlohmann::json poly_to_json(const RationalPolynomial& p);
RationalPolynomial poly_from_json(const nlohmann::json& j);

// One row of the balanced-pair comparison table: the two radii at a given
// alpha and their difference dr = rho_b3 - rho_b5.
struct RadiusTableRow {
    Rational alpha;
    double rho_b3 = 0.0;
    double rho_b5 = 0.0;
    double dr = 0.0;
};

// rho_alpha(bstar3(n,d)) vs rho_alpha(bstar5(n,d)) over an alpha grid.
std::vector<RadiusTableRow> radius_table(int n, int d, const std::vector<Rational>& alphas, double tol = 1e-10);

// CSV with header alpha,rho_b3,rho_b5,dr; values at full double precision so
// the table round-trips exactly.
std::string radius_table_to_csv(const std::vector<RadiusTableRow>& rows);
std::vector<RadiusTableRow> radius_table_from_csv(const std::string& csv);

}  // namespace aspectra

#endif
