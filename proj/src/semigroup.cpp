#include "semitrace/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "semitrace/error.hpp"

namespace semitrace {

NumericalSemigroup::NumericalSemigroup(std::span<const int> generators) {
  if (generators.empty()) {
    throw Error(ErrorKind::EmptyGenerators, "a numerical semigroup needs at least one generator");
  }
  for (int g : generators) {
    if (g < 1) {
      throw Error(ErrorKind::InvalidInput,
                  "generators must be positive, got " + std::to_string(g));
    }
  }
  generators_.assign(generators.begin(), generators.end());
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());

  int g = 0;
  for (int a : generators_) g = std::gcd(g, a);
  if (g != 1) {
    throw Error(ErrorKind::GcdNotOne,
                "gcd of generators is " + std::to_string(g) + ", conductor would be infinite");
  }

  // Membership by dynamic programming; once a run of `smallest` consecutive
  // members appears, every later integer is a member.
  const int smallest = generators_.front();
  std::vector<bool> member;
  int last_gap = -1;
  for (int n = 0;; ++n) {
    bool in = (n == 0);
    for (int a : generators_) {
      if (a > n) break;
      if (member[static_cast<std::size_t>(n - a)]) {
        in = true;
        break;
      }
    }
    member.push_back(in);
    if (!in) last_gap = n;
    if (n - last_gap >= smallest) break;
  }
  member.resize(static_cast<std::size_t>(last_gap + 1));
  window_ = std::move(member);
  conductor_ = last_gap + 1;
  finish_from_window();
}

NumericalSemigroup::NumericalSemigroup(FromWindow, std::vector<bool> window)
    : window_(std::move(window)) {
  conductor_ = static_cast<int>(window_.size());
  finish_from_window();
  generators_ = minimal_generators_;
}

void NumericalSemigroup::finish_from_window() {
  genus_ = static_cast<int>(std::count(window_.begin(), window_.end(), false));
  int smallest = 1;
  while (!contains(smallest)) ++smallest;
  // Minimal generators are at most c + e.
  minimal_generators_.clear();
  for (int s = smallest; s <= conductor_ + smallest; ++s) {
    if (!contains(s)) continue;
    bool decomposable = false;
    for (int x = smallest; x <= s / 2; ++x) {
      if (contains(x) && contains(s - x)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) minimal_generators_.push_back(s);
  }
}

std::vector<int> NumericalSemigroup::gaps() const {
  std::vector<int> out;
  for (int n = 1; n < conductor_; ++n) {
    if (!contains(n)) out.push_back(n);
  }
  return out;
}

std::vector<int> NumericalSemigroup::elements_below(int bound) const {
  std::vector<int> out;
  for (int n = 0; n < bound; ++n) {
    if (contains(n)) out.push_back(n);
  }
  return out;
}

NumericalSemigroup NumericalSemigroup::without_generator(int g) const {
  if (!std::binary_search(minimal_generators_.begin(), minimal_generators_.end(), g)) {
    throw Error(ErrorKind::InvalidInput,
                std::to_string(g) + " is not a minimal generator of " + to_string());
  }
  const int new_conductor = std::max(conductor_, g + 1);
  std::vector<bool> window(static_cast<std::size_t>(new_conductor));
  for (int n = 0; n < new_conductor; ++n) window[static_cast<std::size_t>(n)] = contains(n);
  window[static_cast<std::size_t>(g)] = false;
  return NumericalSemigroup(FromWindow{}, std::move(window));
}

std::string NumericalSemigroup::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < minimal_generators_.size(); ++i) {
    if (i) os << ',';
    os << minimal_generators_[i];
  }
  os << '>';
  return os.str();
}

SemigroupPtr make_semigroup(std::span<const int> generators) {
  return std::make_shared<const NumericalSemigroup>(generators);
}

SemigroupPtr make_semigroup(std::initializer_list<int> generators) {
  return std::make_shared<const NumericalSemigroup>(generators);
}

std::vector<int> parse_exponent_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) {
      throw Error(ErrorKind::InvalidInput, "empty entry in exponent list '" + text + "'");
    }
    const std::string token = item.substr(first, last - first + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) {
      throw Error(ErrorKind::InvalidInput, "not an integer: '" + token + "'");
    }
    out.push_back(value);
  }
  if (out.empty()) throw Error(ErrorKind::EmptyGenerators, "empty exponent list");
  return out;
}

bool report_order_less(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  if (a.genus() != b.genus()) return a.genus() < b.genus();
  return a.minimal_generators() < b.minimal_generators();
}

void enumerate_semigroups(int max_genus,
                          const std::function<void(const NumericalSemigroup&)>& visit,
                          int ceiling) {
  if (max_genus < 0) {
    throw Error(ErrorKind::InvalidInput, "max_genus must be non-negative");
  }
  if (max_genus > ceiling) {
    throw Error(ErrorKind::ResourceLimit, "max_genus " + std::to_string(max_genus) +
                                              " exceeds ceiling " + std::to_string(ceiling));
  }
  std::vector<NumericalSemigroup> level{NumericalSemigroup{1}};
  for (int genus = 0;; ++genus) {
    for (const auto& s : level) visit(s);
    if (genus == max_genus) break;
    std::vector<NumericalSemigroup> next;
    for (const auto& s : level) {
      for (int g : s.minimal_generators()) {
        if (g > s.frobenius()) next.push_back(s.without_generator(g));
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) {
      return a.minimal_generators() < b.minimal_generators();
    });
    level = std::move(next);
  }
}

std::vector<NumericalSemigroup> semigroups_up_to_genus(int max_genus, int ceiling) {
  std::vector<NumericalSemigroup> out;
  enumerate_semigroups(max_genus, [&](const NumericalSemigroup& s) { out.push_back(s); },
                       ceiling);
  return out;
}

}  // namespace semitrace
