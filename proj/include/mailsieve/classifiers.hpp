#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mailsieve/features.hpp"

namespace mailsieve {

enum class ClassifierKind { Logistic, NaiveBayes, ID3, SVMLinear };

const char* to_string(ClassifierKind kind);
std::optional<ClassifierKind> classifier_from_string(std::string_view s);  // logistic|nb|id3|svm

struct Hyperparams {
    double logistic_learning_rate = 0.1;
    std::size_t logistic_max_epochs = 1000;
    double logistic_tolerance = 1e-6;  // on the mean log-likelihood delta
    double logistic_l2 = 0.0;

    double nb_alpha = 1.0;  // Laplace smoothing

    double svm_c = 1.0;
    double svm_tolerance = 1e-3;  // on the hinge objective
    std::size_t svm_max_epochs = 10000;
    std::uint64_t svm_seed = 1;
};

// Degenerate single-class training data collapses every classifier to this.
struct ConstantModel {
    Label label;
};

struct DecisionTree {
    struct Node {
        int attr = -1;            // -1 marks a leaf
        Label value = Label::No;  // leaf class; doubles as the node majority
        int child0 = -1;
        int child1 = -1;
    };
    std::vector<Node> nodes;  // nodes[0] is the root
};

struct NaiveBayesModel {
    double log_prior_yes = 0.0;
    double log_prior_no = 0.0;
    std::vector<double> p1_yes;  // P(attr=1 | Yes), smoothed, strictly inside (0,1)
    std::vector<double> p1_no;
};

struct LogisticModel {
    std::vector<double> weights;
    double bias = 0.0;
};

struct SVMModel {
    std::vector<double> weights;
    double bias = 0.0;
    double c = 1.0;
};

struct TrainedModel {
    ClassifierKind kind;  // the classifier that was requested
    std::size_t n_attrs = 0;
    std::variant<ConstantModel, DecisionTree, NaiveBayesModel, LogisticModel, SVMModel> impl;
};

// Both classes present -> the requested model; single class -> ConstantModel.
// Empty matrix is an error.
TrainedModel train(ClassifierKind kind, const FeatureMatrix& m, const Hyperparams& hp = {});

// Decision thresholds: logistic Yes iff sigmoid >= 0.5; SVM Yes iff w.x+b >= 0;
// naive Bayes ties go to No.
Label predict(const TrainedModel& model, std::span<const std::uint8_t> fv);

// P(Yes | fv); defined for naive Bayes and logistic models only.
double predict_proba(const TrainedModel& model, std::span<const std::uint8_t> fv);

// --- training internals exposed for the numeric checks in the test suite ---

// Mean penalized log-likelihood (the quantity gradient ascent maximizes).
double logistic_objective(const FeatureMatrix& m, const std::vector<double>& w, double b,
                          double l2);
void logistic_gradient(const FeatureMatrix& m, const std::vector<double>& w, double b, double l2,
                       std::vector<double>& grad_w, double& grad_b);

// 0.5*|w|^2 + C * sum_i hinge_i
double svm_objective(const FeatureMatrix& m, const std::vector<double>& w, double b, double c);
// When `best_trace` is non-null it receives the per-epoch running-best
// objective (non-increasing by construction).
TrainedModel train_svm(const FeatureMatrix& m, const Hyperparams& hp,
                       std::vector<double>* best_trace = nullptr);

// --- model files ---

// Versioned plain-text format; parameters carry 17 significant digits so a
// save/load round trip is exact.
void save_model(const TrainedModel& model, const std::vector<std::string>& attribute_names,
                const std::filesystem::path& path);

struct LoadedModel {
    TrainedModel model;
    std::vector<std::string> attribute_names;
};
LoadedModel load_model(const std::filesystem::path& path);

}  // namespace mailsieve
