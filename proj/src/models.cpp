#include "omega/models.hpp"

#include "omega/baselines.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <random>

namespace omega {

HeModel he_model() {
    const Pathology p =
        make_pathology(PathologyParams{-2.903, -2.146, -2.06, 0.0});
    return HeModel{p.H, p.phi0, p.phi1};
}

Matrix generate_random_model(int dim, std::uint64_t seed, double min_gap,
                             double spread) {
    if (dim < 2) throw ConfigError("dim must be >= 2");
    if (!(min_gap > kDegeneracyGuard))
        throw ConfigError("min_gap must exceed the degeneracy guard");
    if (!(spread > 0.0)) throw ConfigError("spread must be positive");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);

    // Ascending eigenvalues: gaps of at least min_gap, total span ~ spread.
    Vector evals(dim);
    double e = -0.5 * spread;
    for (int i = 0; i < dim; ++i) {
        evals[i] = e;
        e += min_gap + uni(rng) * spread / dim;
    }

    // Random orthogonal matrix from a QR factorization with positive R
    // diagonal.
    Matrix G(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) G(i, j) = gauss(rng);
    Eigen::HouseholderQR<Matrix> qr(G);
    Matrix Q = qr.householderQ();
    const Matrix R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; ++j)
        if (R(j, j) < 0.0) Q.col(j) = -Q.col(j);

    Matrix H = Q * evals.asDiagonal() * Q.transpose();
    return 0.5 * (H + H.transpose());
}

Matrix read_matrix_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(path + ": " + e.what());
    }
    if (!j.contains("dim") || !j.contains("entries"))
        throw IoError(path + ": expected keys \"dim\" and \"entries\"");
    const int dim = j["dim"].get<int>();
    if (dim < 2) throw IoError(path + ": dim must be >= 2");
    const auto& rows = j["entries"];
    if (static_cast<int>(rows.size()) != dim)
        throw IoError(path + ": entries row count != dim");
    Matrix H(dim, dim);
    for (int i = 0; i < dim; ++i) {
        if (static_cast<int>(rows[i].size()) != dim)
            throw IoError(path + ": entries column count != dim");
        for (int k = 0; k < dim; ++k) H(i, k) = rows[i][k].get<double>();
    }
    const double asym = (H - H.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12)
        throw IoError(path + ": matrix asymmetric beyond 1e-12 (max " +
                      std::to_string(asym) + ")");
    return 0.5 * (H + H.transpose());
}

void write_matrix_json(const std::string& path, const Matrix& H) {
    nlohmann::json j;
    j["dim"] = H.rows();
    auto rows = nlohmann::json::array();
    for (int i = 0; i < H.rows(); ++i) {
        auto row = nlohmann::json::array();
        for (int k = 0; k < H.cols(); ++k) row.push_back(H(i, k));
        rows.push_back(row);
    }
    j["entries"] = rows;
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace omega
