// Writes the bundled system files from the built-in catalog.
//   gen_catalog <output-dir>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "triplex/catalog.hpp"
#include "triplex/system_io.hpp"

using namespace triplex;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_catalog <output-dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  auto write = [&](const char* file, const std::string& text) {
    std::ofstream(dir / file) << text;
  };
  write("s2.json", dump_system(catalog::s2()));
  write("sl2.json", dump_system(catalog::sl2()));
  write("sl3.json", dump_system(catalog::sl3()));
  write("sl3_sym.json", dump_system(catalog::sl3_symmetric_lts()));
  write("abelian3.json", dump_system(catalog::abelian(3)));
  write("s2_plus_s2.json", dump_system(catalog::direct_sum(catalog::s2(), catalog::s2())));
  return 0;
}
