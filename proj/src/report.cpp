#include "nqopt/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace nqopt {

namespace {

std::string fmt_num(double v) {
  char buf[48];
  if (std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 1e15) {
    std::snprintf(buf, sizeof(buf), "%.0f", v);
  } else {
    std::snprintf(buf, sizeof(buf), "%.6g", v);
  }
  return buf;
}

std::string pad(const std::string& s, std::size_t width, bool right) {
  if (s.size() >= width) return s;
  const std::string fill(width - s.size(), ' ');
  return right ? fill + s : s + fill;
}

struct Cell {
  const SummaryRow* cost = nullptr;
  const SummaryRow* nfe = nullptr;
};

}  // namespace

ReportDocument render_report(const std::vector<SummaryRow>& summaries) {
  ReportDocument doc;

  // Index by (algorithm, n); duplicate metric rows indicate a caller mistake.
  std::map<std::pair<int, int>, Cell> cells;
  std::set<int> size_set;
  std::set<int> algorithm_set;
  for (const SummaryRow& row : summaries) {
    const std::pair<int, int> key{static_cast<int>(row.algorithm), row.n};
    Cell& cell = cells[key];
    const SummaryRow** slot = row.metric == "nfe" ? &cell.nfe : &cell.cost;
    if (*slot != nullptr) {
      doc.warnings.push_back("duplicate summary for " +
                             std::string(to_string(row.algorithm)) + " at n=" +
                             std::to_string(row.n) + " (" + row.metric + ")");
    }
    *slot = &row;
    size_set.insert(row.n);
    algorithm_set.insert(static_cast<int>(row.algorithm));
  }

  std::vector<Algorithm> algorithms;
  for (Algorithm a : kAlgorithms) {
    if (algorithm_set.count(static_cast<int>(a))) algorithms.push_back(a);
  }
  const std::vector<int> sizes(size_set.begin(), size_set.end());

  // Machine-readable: one row per summary.
  std::string csv = "algorithm,n,phase,metric,min,avg,max,replications\n";
  for (const SummaryRow& row : summaries) {
    csv += to_string(row.algorithm);
    csv += ',';
    csv += std::to_string(row.n);
    csv += ',';
    csv += to_string(row.phase);
    csv += ',';
    csv += row.metric;
    csv += ',';
    csv += fmt_num(row.min);
    csv += ',';
    csv += fmt_num(row.avg);
    csv += ',';
    csv += fmt_num(row.max);
    csv += ',';
    csv += std::to_string(row.replications);
    csv += '\n';
  }
  doc.csv = std::move(csv);

  std::ostringstream text;
  text << "Best final cost / best final NFE by algorithm and board size\n";

  // Overview grid: algorithms down, sizes across, "min-cost / min-NFE" cells.
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head{"algorithm"};
  for (int n : sizes) head.push_back("n=" + std::to_string(n));
  grid.push_back(std::move(head));
  for (Algorithm a : algorithms) {
    std::vector<std::string> line{display_name(a)};
    for (int n : sizes) {
      const auto it = cells.find({static_cast<int>(a), n});
      if (it == cells.end() || it->second.cost == nullptr || it->second.nfe == nullptr) {
        line.emplace_back();
        doc.warnings.push_back("no final summary for " + std::string(to_string(a)) +
                               " at n=" + std::to_string(n));
      } else {
        line.push_back(fmt_num(it->second.cost->min) + " / " +
                       fmt_num(it->second.nfe->min));
      }
    }
    grid.push_back(std::move(line));
  }

  std::vector<std::size_t> widths(grid.front().size(), 0);
  for (const auto& line : grid) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      widths[c] = std::max(widths[c], line[c].size());
    }
  }
  for (const auto& line : grid) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) text << "  ";
      text << pad(line[c], widths[c], c != 0);
    }
    text << "\n";
  }

  // Per-size detail in min/avg/max form.
  for (int n : sizes) {
    text << "\nFinal results for n=" << n << "\n";
    std::vector<std::vector<std::string>> table;
    table.push_back({"algorithm", "metric", "min", "avg", "max", "runs"});
    for (Algorithm a : algorithms) {
      const auto it = cells.find({static_cast<int>(a), n});
      if (it == cells.end()) continue;
      for (const SummaryRow* row : {it->second.cost, it->second.nfe}) {
        if (row == nullptr) continue;
        table.push_back({display_name(a), row->metric, fmt_num(row->min),
                         fmt_num(row->avg), fmt_num(row->max),
                         std::to_string(row->replications)});
      }
    }
    std::vector<std::size_t> tw(table.front().size(), 0);
    for (const auto& line : table) {
      for (std::size_t c = 0; c < line.size(); ++c) tw[c] = std::max(tw[c], line[c].size());
    }
    for (const auto& line : table) {
      for (std::size_t c = 0; c < line.size(); ++c) {
        if (c) text << "  ";
        text << pad(line[c], tw[c], c >= 2);
      }
      text << "\n";
    }
  }

  doc.text = std::move(text).str();
  return doc;
}

}  // namespace nqopt
