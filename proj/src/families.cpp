#include "qha/families.hpp"

#include <sstream>

#include "qha/error.hpp"

namespace qha {

std::string example41_text(int m) {
  if (m < 10) fail(ErrorKind::MBelowMinimum, "family example41 requires m >= 10");
  std::ostringstream o;
  o << "# family example41, m = " << m << "\n";
  o << "vertices";
  for (int i = 1; i <= m + 2; ++i) o << ' ' << i;
  o << '\n';
  o << "arrow a1 1 1\n";
  o << "arrow a2 1 2\n";
  for (int j = 3; j <= m; ++j) o << "arrow a" << j << ' ' << j - 1 << ' ' << j << '\n';
  o << "arrow a" << m + 1 << " 1 " << m + 1 << '\n';
  o << "arrow a" << m + 2 << " 1 " << m + 2 << '\n';
  o << "relation a1 a1\n";
  o << "relation a1 a" << m + 1 << '\n';
  o << "relation a1 a" << m + 2 << '\n';
  o << "relation a1 a2\n";
  o << "relation";
  for (int j = 2; j <= m; ++j) o << " a" << j;
  o << '\n';
  return o.str();
}

std::string example42_text(int m) {
  if (m < 9) fail(ErrorKind::MBelowMinimum, "family example42 requires m >= 9");
  std::ostringstream o;
  o << "# family example42, m = " << m << "\n";
  o << "vertices";
  for (int i = 1; i <= 2 * m - 1; ++i) o << ' ' << i;
  o << '\n';
  o << "arrow a1 1 2\n";
  for (int i = 2; i <= m - 1; ++i) o << "arrow a" << i << ' ' << i << ' ' << i + 1 << '\n';
  o << "arrow a" << m + 1 << " 1 " << m + 1 << '\n';
  for (int j = m + 2; j <= 2 * m - 1; ++j) o << "arrow a" << j << ' ' << j - 1 << ' ' << j << '\n';
  for (int i = m + 1; i <= 2 * m - 2; ++i) o << "relation a" << i << " a" << i + 1 << '\n';
  return o.str();
}

}  // namespace qha
