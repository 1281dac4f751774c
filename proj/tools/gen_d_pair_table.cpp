// Writes src/d_pair_table.inc: the D~ consecutive-brick pairs certified by
// the matrix oracle for n = 3 and n = 4.
#include <cstdio>

#include "coxcanon/affine_bd.hpp"

int main() {
  std::printf(
      "// Generated by tools/gen_d_pair_table. Rows: n, prev (j, i), next (j, "
      "i).\nconstexpr StoredPair kStoredPairs[] = {\n");
  for (int n = 3; n <= 4; ++n)
    for (const auto& [p, q] : coxcanon::d_pair_table_oracle(n))
      std::printf("    {%d, %d, %d, %d, %d},\n", n, p.j, p.i, q.j, q.i);
  std::printf("};\n");
}
