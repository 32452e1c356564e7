#include "nqopt/presets.hpp"

namespace nqopt {

const std::vector<int>& reference_sizes() {
  static const std::vector<int> sizes{8, 10, 25, 50, 100, 200, 300, 500, 1000};
  return sizes;
}

namespace {

std::optional<AlgorithmConfig> brado_for(int n) {
  BradoConfig c;
  switch (n) {
    case 8:    c = {15, 0.8, 0.15, 90, 0.6, 0.2, 6, 100}; break;
    case 10:   c = {20, 0.7, 0.1, 90, 0.6, 0.2, 6, 150}; break;
    case 25:   c = {20, 0.8, 0.1, 80, 0.6, 0.2, 7, 150}; break;
    case 50:   c = {20, 0.8, 0.1, 70, 0.8, 0.1, 5, 150}; break;
    case 100:  c = {12, 0.8, 0.25, 100, 0.8, 0.1, 7, 150}; break;
    case 200:  c = {20, 0.8, 0.2, 70, 0.8, 0.2, 8, 150}; break;
    case 300:  c = {12, 0.8, 0.2, 100, 0.8, 0.1, 6, 150}; break;
    case 500:  c = {10, 0.8, 0.25, 100, 0.8, 0.1, 5, 150}; break;
    case 1000: c = {10, 0.8, 0.15, 70, 0.9, 0.1, 6, 150}; break;
    default: return std::nullopt;
  }
  return AlgorithmConfig{c};
}

std::optional<AlgorithmConfig> ga_for(int n) {
  GaConfig c;
  switch (n) {
    case 8:    c = {150, 50, 0.1, 0.6}; break;
    case 10:   c = {150, 100, 0.1, 0.4}; break;
    case 25:   c = {150, 30, 0.1, 0.4}; break;
    case 50:   c = {150, 30, 0.1, 0.4}; break;
    case 100:  c = {30, 30, 0.1, 0.5}; break;
    case 200:  c = {150, 30, 0.1, 0.4}; break;
    case 300:  c = {150, 30, 0.1, 0.4}; break;
    case 500:  c = {150, 30, 0.1, 0.5}; break;
    case 1000: c = {70, 30, 0.1, 0.4}; break;
    default: return std::nullopt;
  }
  return AlgorithmConfig{c};
}

std::optional<AlgorithmConfig> ica_for(int n) {
  IcaConfig c;
  switch (n) {
    case 8:    c = {0.4, 0.02, 0.04, 90, 1, 8, 100}; break;
    case 10:   c = {0.3, 0.01, 0.01, 80, 1, 7, 150}; break;
    case 25:   c = {0.3, 0.1, 0.03, 70, 1, 6, 100}; break;
    case 50:   c = {0.2, 0.01, 0.03, 80, 1, 6, 150}; break;
    case 100:  c = {0.5, 0.01, 0.04, 90, 1, 7, 100}; break;
    case 200:  c = {0.3, 0.01, 0.01, 100, 1, 7, 150}; break;
    case 300:  c = {0.2, 0.01, 0.04, 100, 2, 5, 150}; break;
    case 500:  c = {0.4, 0.03, 0.04, 90, 2, 6, 150}; break;
    case 1000: c = {0.04, 0.04, 0.03, 90, 2, 5, 100}; break;
    default: return std::nullopt;
  }
  return AlgorithmConfig{c};
}

std::optional<AlgorithmConfig> pso_for(int n) {
  PsoConfig c;
  switch (n) {
    case 8:    c = {30, 100, 1.5, 0.5}; break;
    case 10:   c = {100, 100, 1, 0.5}; break;
    case 25:   c = {70, 100, 1.5, 0.5}; break;
    case 50:   c = {70, 100, 2, 0.5}; break;
    case 100:  c = {100, 100, 1, 0.5}; break;
    case 200:  c = {150, 50, 1.5, 1.5}; break;
    case 300:  c = {70, 80, 2, 1.5}; break;
    case 500:  c = {70, 80, 2, 1}; break;
    case 1000: c = {70, 30, 1, 2}; break;
    default: return std::nullopt;
  }
  return AlgorithmConfig{c};
}

std::optional<AlgorithmConfig> ils_for(int n) {
  IlsConfig c;
  switch (n) {
    case 8:    c = {InitMethod::UniformColumns, 100, 1, 15}; break;
    case 10:   c = {InitMethod::UniformColumns, 70, 1, 15}; break;
    case 25:   c = {InitMethod::UniformColumns, 100, 0.8, 20}; break;
    case 50:   c = {InitMethod::UniformColumns, 150, 0.8, 15}; break;
    case 100:  c = {InitMethod::UniformColumns, 150, 1, 20}; break;
    case 200:  c = {InitMethod::UniformColumns, 150, 1, 20}; break;
    case 300:  c = {InitMethod::UniformColumns, 70, 1, 15}; break;
    case 500:  c = {InitMethod::RandomPermutation, 70, 1, 5}; break;
    case 1000: c = {InitMethod::RandomPermutation, 30, 1, 5}; break;
    default: return std::nullopt;
  }
  return AlgorithmConfig{c};
}

std::optional<AlgorithmConfig> ls_for(int n) {
  LsConfig c;
  switch (n) {
    case 8:    c = {150, 0.8}; break;
    case 10:   c = {150, 1}; break;
    case 25:   c = {150, 0.8}; break;
    case 50:   c = {70, 0.8}; break;
    case 100:  c = {30, 0.2}; break;
    case 200:  c = {30, 0.2}; break;
    case 300:  c = {30, 0.2}; break;
    case 500:  c = {30, 0.2}; break;
    case 1000: c = {30, 0.5}; break;
    default: return std::nullopt;
  }
  return AlgorithmConfig{c};
}

std::optional<AlgorithmConfig> mls_for(int n) {
  MlsConfig c;
  switch (n) {
    case 8:    c = {150, 1, 20}; break;
    case 10:   c = {100, 1, 20}; break;
    case 25:   c = {150, 1, 15}; break;
    case 50:   c = {150, 1, 20}; break;
    case 100:  c = {100, 1, 20}; break;
    case 200:  c = {150, 1, 5}; break;
    case 300:  c = {30, 1, 5}; break;
    case 500:  c = {30, 1, 5}; break;
    case 1000: c = {30, 1, 5}; break;
    default: return std::nullopt;
  }
  return AlgorithmConfig{c};
}

}  // namespace

std::optional<AlgorithmConfig> reference_config(Algorithm a, int n) {
  switch (a) {
    case Algorithm::Brado: return brado_for(n);
    case Algorithm::Ga: return ga_for(n);
    case Algorithm::Ica: return ica_for(n);
    case Algorithm::Pso: return pso_for(n);
    case Algorithm::Ils: return ils_for(n);
    case Algorithm::Ls: return ls_for(n);
    case Algorithm::Mls: return mls_for(n);
  }
  return std::nullopt;
}

}  // namespace nqopt
