#pragma once

// CSV datasets, JSON model files and Graphviz export. All writers produce
// byte-identical output for identical inputs: doubles are printed with the
// shortest round-trip form and JSON field order is fixed.

#include <iosfwd>
#include <string>

#include "xkm/types.hpp"

namespace xkm {

DataMatrix read_csv(std::istream& in, bool header = false);
DataMatrix read_csv_file(const std::string& path, bool header = false);
void write_csv(std::ostream& out, const Matrix& m);
void write_csv_file(const std::string& path, const Matrix& m);

// One integer per line.
Labeling read_labels_file(const std::string& path);
void write_labels_file(const std::string& path, const Labeling& labels);

std::string tree_to_json(const ThresholdTree& tree);
ThresholdTree tree_from_json(const std::string& text);
ThresholdTree read_tree_file(const std::string& path);
void write_tree_file(const std::string& path, const ThresholdTree& tree);

std::string cut_to_json(const CutResult& cut, Objective objective);

// Graphviz. Internal nodes show their split, leaves their cluster id.
std::string tree_to_dot(const ThresholdTree& tree);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace xkm
