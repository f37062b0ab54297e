#include "corona/oracle.hh"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace corona {

eigen_result symmetric_eigenvalues(const imat& m) {
    if (!m.is_square()) throw std::invalid_argument("symmetric_eigenvalues: matrix not square");
    if (!m.is_symmetric()) throw std::invalid_argument("symmetric_eigenvalues: matrix not symmetric");
    int n = m.rows;
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) a(i, j) = (double)m.at(i, j);
    eigen_result out;
    if (n == 0) return out;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("symmetric_eigenvalues: solver failed to converge");
    out.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
    Eigen::MatrixXd recon =
        es.eigenvectors() * es.eigenvalues().asDiagonal() * es.eigenvectors().transpose();
    out.residual = (recon - a).cwiseAbs().maxCoeff();
    return out;
}

multiset_compare multiset_equal(std::vector<double> a, std::vector<double> b, double tol) {
    if (a.size() != b.size())
        throw std::invalid_argument("multiset_equal: length mismatch");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    multiset_compare out;
    for (size_t i = 0; i < a.size(); i++)
        out.max_deviation = std::max(out.max_deviation, std::abs(a[i] - b[i]));
    out.equal = out.max_deviation <= tol;
    return out;
}

bool is_connected(const graph& g) {
    if (g.n <= 1) return true;
    std::vector<std::vector<int>> adj((size_t)g.n);
    for (auto [u, v] : g.edges) {
        adj[(size_t)u].push_back(v);
        adj[(size_t)v].push_back(u);
    }
    std::vector<char> seen((size_t)g.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[(size_t)u])
            if (!seen[(size_t)v]) {
                seen[(size_t)v] = 1;
                count++;
                stack.push_back(v);
            }
    }
    return count == g.n;
}

double coronal_numeric(const imat& m2, double y) {
    if (!m2.is_square()) throw std::invalid_argument("coronal_numeric: matrix not square");
    int n = m2.rows;
    if (n == 0) return 0.0;
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) a(i, j) = (i == j ? y : 0.0) - (double)m2.at(i, j);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    if (!lu.isInvertible())
        throw std::runtime_error("coronal_numeric: evaluation point is an eigenvalue");
    Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
    return lu.solve(ones).sum();
}

} // namespace corona
