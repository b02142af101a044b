#include "griddom/grid.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace griddom {

namespace {
namespace dc = dom_cell;
namespace rc = roman_cell;

int stoneNeighbours(const GridAssignment& a, int r, int c,
                    std::uint8_t level) {
  int cnt = 0;
  cnt += a.inside(r - 1, c) && a.at(r - 1, c) >= level;
  cnt += a.inside(r + 1, c) && a.at(r + 1, c) >= level;
  cnt += a.inside(r, c - 1) && a.at(r, c - 1) >= level;
  cnt += a.inside(r, c + 1) && a.at(r, c + 1) >= level;
  return cnt;
}
}  // namespace

GridAssignment GridAssignment::transposed() const {
  GridAssignment t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.set(c, r, at(r, c));
  return t;
}

bool isDominating(const GridAssignment& a, Variant v) {
  if (a.rows <= 0 || a.cols <= 0) return false;
  if (v == Variant::RomanDomination) {
    for (int r = 0; r < a.rows; ++r)
      for (int c = 0; c < a.cols; ++c) {
        if (a.at(r, c) > 2) return false;
        if (a.at(r, c) == 0 && stoneNeighbours(a, r, c, 2) < 1) return false;
      }
    return true;
  }
  const int d = dominationDemand(v);
  for (int r = 0; r < a.rows; ++r)
    for (int c = 0; c < a.cols; ++c) {
      if (a.at(r, c) > 1) return false;
      if (a.at(r, c) == 0 && stoneNeighbours(a, r, c, 1) < d) return false;
    }
  return true;
}

long long assignmentCost(const GridAssignment& a, Variant) {
  long long total = 0;
  for (std::uint8_t s : a.stones) total += s;
  return total;
}

std::vector<ColumnState> columnStates(const GridAssignment& a, Variant v) {
  std::vector<ColumnState> cols;
  cols.reserve(static_cast<std::size_t>(a.cols));
  for (int c = 0; c < a.cols; ++c) {
    ColumnState s(a.rows);
    for (int r = 0; r < a.rows; ++r) {
      if (v == Variant::RomanDomination) {
        if (a.at(r, c) == 2) {
          s[r] = rc::kTwoStones;
        } else if (a.at(r, c) == 1) {
          s[r] = rc::kStone;
        } else {
          const int recv = (a.inside(r, c - 1) && a.at(r, c - 1) == 2) +
                           (a.inside(r - 1, c) && a.at(r - 1, c) == 2) +
                           (a.inside(r + 1, c) && a.at(r + 1, c) == 2);
          s[r] = recv >= 1 ? rc::kOk : rc::kNeedOne;
        }
      } else {
        if (a.at(r, c) >= 1) {
          s[r] = dc::kStone;
        } else {
          const int recv = (a.inside(r, c - 1) && a.at(r, c - 1) >= 1) +
                           (a.inside(r - 1, c) && a.at(r - 1, c) >= 1) +
                           (a.inside(r + 1, c) && a.at(r + 1, c) >= 1);
          s[r] = recv >= dominationDemand(v) ? dc::kOk : dc::kNeedOne;
        }
      }
    }
    cols.push_back(std::move(s));
  }
  return cols;
}

long long assignmentLoss(const GridAssignment& a, Variant v) {
  long long loss = 0;
  if (v == Variant::RomanDomination) {
    for (int r = 0; r < a.rows; ++r)
      for (int c = 0; c < a.cols; ++c) {
        const std::uint8_t s = a.at(r, c);
        if (s == 2) {
          const int inGrid = a.inside(r - 1, c) + a.inside(r + 1, c) +
                             a.inside(r, c - 1) + a.inside(r, c + 1);
          loss += 2 * (4 - inGrid);
        }
        if (s == 1) loss += 3;
        const int recv = (s > 0 ? 1 : 0) + stoneNeighbours(a, r, c, 2);
        if (recv > 1) loss += 2 * (recv - 1);
      }
    return loss;
  }
  const int d = dominationDemand(v);
  for (int r = 0; r < a.rows; ++r)
    for (int c = 0; c < a.cols; ++c) {
      if (a.at(r, c) >= 1) {
        const int offGrid = 4 - (a.inside(r - 1, c) + a.inside(r + 1, c) +
                                 a.inside(r, c - 1) + a.inside(r, c + 1));
        loss += offGrid + stoneNeighbours(a, r, c, 1);
      } else {
        loss += stoneNeighbours(a, r, c, 1) - d;
      }
    }
  return loss;
}

std::string renderAssignment(const GridAssignment& a) {
  std::string out;
  out.reserve(static_cast<std::size_t>(a.rows) * (a.cols + 1));
  for (int r = 0; r < a.rows; ++r) {
    for (int c = 0; c < a.cols; ++c) {
      const std::uint8_t s = a.at(r, c);
      out += s == 0 ? '.' : (s == 1 ? '#' : '2');
    }
    out += '\n';
  }
  return out;
}

void writeWitness(std::ostream& out, const GridAssignment& a, Variant v) {
  nlohmann::json header = {{"n", a.rows},
                           {"m", a.cols},
                           {"variant", variantName(v)},
                           {"cost", assignmentCost(a, v)}};
  out << header.dump() << "\n" << renderAssignment(a);
}

GridAssignment parseAssignment(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '{') continue;  // header line
    lines.push_back(line);
  }
  if (lines.empty()) throw std::invalid_argument("parseAssignment: empty");
  GridAssignment a(static_cast<int>(lines.size()),
                   static_cast<int>(lines[0].size()));
  for (int r = 0; r < a.rows; ++r) {
    if (static_cast<int>(lines[r].size()) != a.cols)
      throw std::invalid_argument("parseAssignment: ragged rows");
    for (int c = 0; c < a.cols; ++c) {
      const char ch = lines[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (ch == '.') a.set(r, c, 0);
      else if (ch == '#') a.set(r, c, 1);
      else if (ch == '2') a.set(r, c, 2);
      else throw std::invalid_argument("parseAssignment: bad cell char");
    }
  }
  return a;
}

}  // namespace griddom
