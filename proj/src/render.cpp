#include "forestf/render.hpp"

#include <algorithm>
#include <vector>

namespace forestf {

namespace {

// Caret rows for one forest, indexed by node height starting at 1. A caret
// spanning columns [a, b] occupies text positions [2a, 2b].
struct CaretRows {
  std::vector<std::string> rows;

  void mark(int height, int start_col, int end_col, bool top_side, int width) {
    while (static_cast<int>(rows.size()) < height) rows.push_back(std::string(width, ' '));
    std::string& row = rows[height - 1];
    int a = 2 * start_col;
    int b = 2 * end_col;
    row[a] = top_side ? '/' : '\\';
    row[b] = top_side ? '\\' : '/';
    for (int i = a + 1; i < b; ++i) row[i] = '-';
  }
};

void draw_tree(const Tree& t, int col, bool top_side, int width, CaretRows& rows) {
  if (t.is_leaf()) return;
  rows.mark(t.height(), col, col + t.leaf_count() - 1, top_side, width);
  draw_tree(t.left(), col, top_side, width, rows);
  draw_tree(t.right(), col + t.left().leaf_count(), top_side, width, rows);
}

std::string leaf_row(const Forest& f, int columns, int width) {
  std::string row(width, ' ');
  for (int c = 0; c < columns; ++c) row[2 * c] = '.';
  row[2 * f.leaf_start(f.pointer)] = '*';
  return row;
}

void trim_trailing(std::string& s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
}

}  // namespace

std::string render_ascii(const ForestDiagram& f) {
  int columns = f.columns();
  int width = 2 * columns - 1;

  CaretRows top_rows, bottom_rows;
  int col = 0;
  for (const Tree& t : f.top.trees) {
    draw_tree(t, col, true, width, top_rows);
    col += t.leaf_count();
  }
  col = 0;
  for (const Tree& t : f.bottom.trees) {
    draw_tree(t, col, false, width, bottom_rows);
    col += t.leaf_count();
  }

  std::vector<std::string> lines;
  for (auto it = top_rows.rows.rbegin(); it != top_rows.rows.rend(); ++it) lines.push_back(*it);
  lines.push_back(leaf_row(f.top, columns, width));
  lines.push_back(leaf_row(f.bottom, columns, width));
  for (const std::string& row : bottom_rows.rows) lines.push_back(row);

  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    trim_trailing(lines[i]);
    out += lines[i];
    if (i + 1 < lines.size()) out += '\n';
  }
  return out;
}

namespace {

struct DotWriter {
  std::string out;
  int next_id = 0;

  int write_tree(const Tree& t, const std::string& prefix) {
    int id = next_id++;
    std::string name = prefix + std::to_string(id);
    if (t.is_leaf()) {
      out += "    " + name + " [shape=point];\n";
      return id;
    }
    out += "    " + name + " [shape=circle, label=\"\"];\n";
    int left = write_tree(t.left(), prefix);
    int right = write_tree(t.right(), prefix);
    out += "    " + name + " -> " + prefix + std::to_string(left) + ";\n";
    out += "    " + name + " -> " + prefix + std::to_string(right) + ";\n";
    return id;
  }

  void write_forest(const Forest& f, const std::string& cluster, const std::string& prefix) {
    out += "  subgraph cluster_" + cluster + " {\n";
    out += "    label=\"" + cluster + "\";\n";
    next_id = 0;
    for (int i = 0; i < f.tree_count(); ++i) {
      int root = write_tree(f.trees[i], prefix);
      if (i == f.pointer)
        out += "    " + prefix + std::to_string(root) + " [peripheries=2];\n";
    }
    out += "  }\n";
  }
};

}  // namespace

std::string render_dot(const ForestDiagram& f) {
  DotWriter w;
  w.out = "digraph diagram {\n";
  w.write_forest(f.top, "top", "t");
  w.write_forest(f.bottom, "bottom", "b");
  w.out += "}\n";
  return w.out;
}

}  // namespace forestf
