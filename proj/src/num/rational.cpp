#include "num/rational.hpp"

namespace btg::num {

std::optional<Rat> parse_rat(const std::string& s) {
  if (s.empty()) return std::nullopt;
  // mpq_class(string) aborts on garbage, so validate by hand first.
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) return std::nullopt;
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
    return std::nullopt;
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace btg::num
