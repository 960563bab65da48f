#include "tables.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "asm_algebra.hpp"
#include "congruence.hpp"
#include "matrix.hpp"

namespace pmh {

std::string dims_csv(const std::string& what, int k, Grading grading, int max_degree) {
  std::ostringstream out;
  if (what == "all" || what == "generators" || what == "primitives") {
    DimSeries h = hilbert_series(k, grading, max_degree);
    DimSeries g = series_generators(h);
    DimSeries t = series_totally_primitive(h);
    if (what == "all") {
      out << "degree,dimension,generators,totally_primitive\n";
      for (int d = 0; d <= max_degree; ++d)
        out << d << ',' << h.at(d) << ',' << g.at(d) << ',' << t.at(d) << '\n';
    } else if (what == "generators") {
      out << "degree,generators\n";
      for (int d = 0; d <= max_degree; ++d) out << d << ',' << g.at(d) << '\n';
    } else {
      out << "degree,totally_primitive\n";
      for (int d = 0; d <= max_degree; ++d) out << d << ',' << t.at(d) << '\n';
    }
    return out.str();
  }

  if (what.rfind("congruence:", 0) == 0) {
    CongruenceKind kind = congruence_from_name(what.substr(11));
    out << "degree,dimension\n";
    for (int d = 0; d <= max_degree; ++d)
      out << d << ',' << class_count(kind, k, grading, d) << '\n';
    return out.str();
  }

  if (what == "asm") {
    if (grading != Grading::Size)
      throw std::invalid_argument("ASM dimensions are graded by size only");
    out << "degree,dimension\n";
    for (int d = 0; d <= max_degree; ++d) out << d << ',' << enumerate_asm(d).size() << '\n';
    return out.str();
  }

  if (what.rfind("quotient:", 0) == 0) {
    if (grading != Grading::Size)
      throw std::invalid_argument("quotient dimensions are graded by size only");
    std::set<Stat> stats;
    std::istringstream names(what.substr(9));
    std::string name;
    while (std::getline(names, name, ',')) stats.insert(stat_from_name(name));
    if (stats.empty()) throw std::invalid_argument("empty statistic set");
    out << "degree,dimension\n";
    for (int d = 0; d <= max_degree; ++d) out << d << ',' << quotient_dim(stats, d) << '\n';
    return out.str();
  }

  throw std::invalid_argument("unknown dims selector: " + what);
}

std::string asm_stats_csv(int n) {
  std::ostringstream out;
  out << "n,stat,value,count\n";
  std::map<Stat, std::map<long, long>> histogram;
  for (const auto& a : enumerate_asm(n)) {
    VertexStats st = six_vertex_stats(a);
    for (Stat s : {Stat::Ne, Stat::Sw, Stat::Se, Stat::Nw, Stat::Oi, Stat::Io})
      ++histogram[s][st.get(s)];
  }
  for (const auto& [s, values] : histogram)
    for (const auto& [value, count] : values)
      out << n << ',' << stat_name(s) << ',' << value << ',' << count << '\n';
  return out.str();
}

}  // namespace pmh
