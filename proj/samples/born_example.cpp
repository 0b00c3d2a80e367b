// Minimal library use: destructive interference in the two-dimensional
// subspace of S3 while the full-space probability stays positive.
//
//   g++ -std=c++20 -I../include -I../vendor born_example.cpp -lgmpxx -lgmp -lmpfr

#include <iostream>

#include "permuton/permuton.hpp"

int main() {
  using namespace permuton;
  PermGroup g = closure({parse_cycles("(2,3)", 3), parse_cycles("(1,3,2)", 3)});
  GroupAction action = GroupAction::natural(g);
  CharacterTable table = character_table(g);
  IsotypicProjector standard = nontrivial_projector(action, table);

  NaturalVector m{1, 3, 2}, n{1, 1, 2};
  std::cout << "full space: " << to_string(born_full(m, n).probability) << "\n";
  std::cout << "subspace " << standard.label() << ": " << to_string(born_subspace(m, n, standard).probability)
            << "\n";
  std::cout << "decomposition: " << decomposition_string(multiplicities(action, table), table) << "\n";
}
