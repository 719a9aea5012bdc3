// Writes every bundled scenario to corpus/<id>.json.
#include "gmet/json_io.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "corpus";
  for (const std::string& id : gmet::corpus_ids()) {
    gmet::Scenario sc = gmet::load_example(id);
    std::string path = dir + "/" + id + ".json";
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << path << "\n";
      return 1;
    }
    out << gmet::scenario_to_json(sc).dump(2) << "\n";
    std::cout << path << "\n";
  }
  return 0;
}
