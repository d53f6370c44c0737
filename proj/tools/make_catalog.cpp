// Writes the multiplication-table catalogs under data/groups.
#include <fstream>
#include <iostream>

#include "haarforge/groups.hpp"

using namespace haarforge;

namespace {

FiniteGroup renamed(const FiniteGroup& g, const std::string& name) { return validate_table(g.table(), name); }

// Units +-1, +-i, +-j, +-k of the quaternions; element 2*q + s is (-1)^s q.
FiniteGroup quaternion8() {
  static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<Element>> t(8, std::vector<Element>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int q = unit[a / 2][b / 2];
      const int s = (a % 2 + b % 2 + sign[a / 2][b / 2]) % 2;
      t[a][b] = static_cast<Element>(2 * q + s);
    }
  return validate_table(t, "Q8");
}

void write(const std::filesystem::path& dir, const std::string& file, const FiniteGroup& g) {
  std::filesystem::create_directories(dir);
  std::ofstream out(dir / file);
  write_group(out, g);
  if (!out) throw std::runtime_error("cannot write " + (dir / file).string());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_catalog <data/groups>\n";
    return 2;
  }
  const std::filesystem::path root = argv[1];
  const auto o20 = root / "order20";
  write(o20, "1_Z20.txt", cyclic(20));
  write(o20, "2_Z10xZ2.txt", renamed(direct_product(cyclic(10), cyclic(2)), "Z10xZ2"));
  write(o20, "3_D10.txt", renamed(generalized_dihedral(cyclic(10)), "D10"));
  write(o20, "4_Dic5.txt", renamed(semidirect_cyclic(5, 4, 4), "Dic5"));
  write(o20, "5_F20.txt", renamed(semidirect_cyclic(5, 4, 2), "F20"));

  const auto small = root / "small";
  write(small, "02_Z2.txt", cyclic(2));
  write(small, "03_Z3.txt", cyclic(3));
  write(small, "04a_Z4.txt", cyclic(4));
  write(small, "04b_Z2xZ2.txt", renamed(direct_product(cyclic(2), cyclic(2)), "Z2xZ2"));
  write(small, "05_Z5.txt", cyclic(5));
  write(small, "06a_Z6.txt", cyclic(6));
  write(small, "06b_S3.txt", renamed(generalized_dihedral(cyclic(3)), "S3"));
  write(small, "07_Z7.txt", cyclic(7));
  write(small, "08a_Z8.txt", cyclic(8));
  write(small, "08b_Z4xZ2.txt", renamed(direct_product(cyclic(4), cyclic(2)), "Z4xZ2"));
  write(small, "08c_Z2xZ2xZ2.txt",
        renamed(direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)), "Z2xZ2xZ2"));
  write(small, "08d_D4.txt", renamed(generalized_dihedral(cyclic(4)), "D4"));
  write(small, "08e_Q8.txt", quaternion8());
  return 0;
}
