#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cwg/graph.hpp"
#include "cwg/ownership.hpp"

namespace cwg {

struct MaryTree;

/// A family of edge subsets over a board, either materialized (Explicit) or
/// represented by closed-form counting (oracle kinds). Weight sums are
/// \sum_A x^{|A|}-style quantities; potentials restrict to members still
/// untouched by one side and use the free-element count as exponent.
class FamilyBase {
public:
    virtual ~FamilyBase() = default;

    virtual long long member_count() const = 0;
    virtual int min_member_size() const = 0;

    /// \sum_{A} x^{|A|}, accumulated in long double.
    virtual double weight_sum(double x) const = 0;

    /// \sum over members with no Waiter element of x^{|A cap Free|}.
    virtual double potential_alive(const OwnershipVec& owner, double x) const = 0;
    /// \sum over members with no Client element of x^{|A cap Free|}.
    virtual double potential_unhit(const OwnershipVec& owner, double x) const = 0;

    /// Every member contains a Client element.
    virtual bool all_hit(const OwnershipVec& owner) const = 0;
    /// Some member lies fully inside Client's edges.
    virtual bool any_contained(const OwnershipVec& owner) const = 0;

    virtual bool supports_potentials() const { return true; }
    virtual const std::vector<std::vector<EdgeId>>* members() const { return nullptr; }
};

class Family {
public:
    Family() = default;
    explicit Family(std::shared_ptr<const FamilyBase> impl) : impl_(std::move(impl)) {}

    static Family explicit_family(std::vector<std::vector<EdgeId>> members);

    bool valid() const { return impl_ != nullptr; }
    const FamilyBase& base() const { return *impl_; }

    long long member_count() const { return impl_->member_count(); }
    int min_member_size() const { return impl_->min_member_size(); }
    double weight_sum(double x) const { return impl_->weight_sum(x); }
    double potential_alive(const OwnershipVec& o, double x) const {
        return impl_->potential_alive(o, x);
    }
    double potential_unhit(const OwnershipVec& o, double x) const {
        return impl_->potential_unhit(o, x);
    }
    bool all_hit(const OwnershipVec& o) const { return impl_->all_hit(o); }
    bool any_contained(const OwnershipVec& o) const { return impl_->any_contained(o); }
    bool supports_potentials() const { return impl_->supports_potentials(); }
    const std::vector<std::vector<EdgeId>>* members() const { return impl_->members(); }

private:
    std::shared_ptr<const FamilyBase> impl_;
};

struct FamilyParams {
    double eps = 0, delta = 0, delta1 = 0, delta2 = 0, theta = 0, gamma = 0;
    double d = 0, p = 0;
    int k = 0, m = 0;
    long long budget = 2'000'000;  // explicit member-count cap
};

/// Kinds: sparse_component, path_triple, disjoint_cut, regular_cut,
/// tree_outedges. See the builders in family.cpp for the parameter use.
Family build_family(const std::string& kind, const Graph& board, const FamilyParams& params,
                    int q);

/// tree_outedges directly from a built tree (child-edge lists known).
Family tree_out_edges_family(const MaryTree& tree, int k, int q);

struct CriteriaReport {
    double phi_es = 0;  // sum (q+1)^{-|A|}
    double phi_t = 0;   // sum e^{-|A|/(q+1)}
    double phi_w = 0;   // sum 2^{-|A|}
};

CriteriaReport evaluate_criteria(const Family& f, int q);

}  // namespace cwg
