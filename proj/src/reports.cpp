#include "aspectra/reports.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "aspectra/errors.hpp"
#include "aspectra/families.hpp"
#include "aspectra/spectral.hpp"

namespace aspectra {

nlohmann::json poly_to_json(const RationalPolynomial& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(rational_to_string(p.coeff(i)));
    return coeffs;
}

RationalPolynomial poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("polynomial JSON must be an array of rationals");
    std::vector<Rational> coeffs;
    for (const auto& item : j) coeffs.push_back(rational_from_string(item.get<std::string>()));
    return RationalPolynomial(std::move(coeffs));
}

std::vector<RadiusTableRow> radius_table(int n, int d, const std::vector<Rational>& alphas, double tol) {
    Graph b3 = bstar3(n, d);
    Graph b5 = bstar5(n, d);
    std::vector<RadiusTableRow> rows;
    rows.reserve(alphas.size());
    for (const Rational& alpha : alphas) {
        RadiusTableRow row;
        row.alpha = alpha;
        row.rho_b3 = spectral_radius(b3, alpha, tol).radius;
        row.rho_b5 = spectral_radius(b5, alpha, tol).radius;
        row.dr = row.rho_b3 - row.rho_b5;
        rows.push_back(row);
    }
    return rows;
}

namespace {

std::string full_precision(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string radius_table_to_csv(const std::vector<RadiusTableRow>& rows) {
    std::ostringstream os;
    os << "alpha,rho_b3,rho_b5,dr\n";
    for (const auto& row : rows) {
        os << rational_to_string(row.alpha) << "," << full_precision(row.rho_b3) << ","
           << full_precision(row.rho_b5) << "," << full_precision(row.dr) << "\n";
    }
    return os.str();
}

std::vector<RadiusTableRow> radius_table_from_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line != "alpha,rho_b3,rho_b5,dr")
        throw ParseError("unexpected CSV header: " + line);
    std::vector<RadiusTableRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string alpha, b3, b5, dr;
        if (!std::getline(fields, alpha, ',') || !std::getline(fields, b3, ',') ||
            !std::getline(fields, b5, ',') || !std::getline(fields, dr))
            throw ParseError("short CSV row: " + line);
        RadiusTableRow row;
        row.alpha = rational_from_string(alpha);
        row.rho_b3 = std::stod(b3);
        row.rho_b5 = std::stod(b5);
        row.dr = std::stod(dr);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace aspectra
