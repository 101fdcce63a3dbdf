#include "clusterf/matrix.hpp"

#include <sstream>

#include "clusterf/error.hpp"

namespace clusterf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotSkewSymmetrizable: return "NotSkewSymmetrizable";
    case ErrorKind::NotAcyclic: return "NotAcyclic";
    case ErrorKind::NotClassicalType: return "NotClassicalType";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NegativeExponentOnNonMonomial: return "NegativeExponentOnNonMonomial";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::LaurentPhenomenonViolation: return "LaurentPhenomenonViolation";
    case ErrorKind::NotPolynomial: return "NotPolynomial";
    case ErrorKind::NoConstantTerm: return "NoConstantTerm";
    case ErrorKind::AmbiguousGVector: return "AmbiguousGVector";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::MissingRoot: return "MissingRoot";
    case ErrorKind::ExtraRoot: return "ExtraRoot";
    case ErrorKind::RootNotInType: return "RootNotInType";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::WrongType: return "WrongType";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::NoUnfoldedRoot: return "NoUnfoldedRoot";
    case ErrorKind::QuadrilateralNotFound: return "QuadrilateralNotFound";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::PositivityViolation: return "PositivityViolation";
    case ErrorKind::ReconstructionMismatch: return "ReconstructionMismatch";
    case ErrorKind::ProjectionMismatch: return "ProjectionMismatch";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

bool dominates(const RootVector& a, const RootVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dominates");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

RootVector unit_vector(std::size_t n, std::size_t i) {
  RootVector v(n, 0);
  v.at(i) = 1;
  return v;
}

std::string to_string(const RootVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::principal_part() const {
  if (rows_ < cols_) throw Error(ErrorKind::DimensionMismatch, "fewer rows than columns");
  IntMatrix p(cols_, cols_);
  for (std::size_t i = 0; i < cols_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) p(i, j) = (*this)(i, j);
  return p;
}

std::vector<std::vector<int>> IntMatrix::to_rows() const {
  std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace clusterf
