//! Ideal linear secret sharing from a representation.
//!
//! One column is the dealer. The dealer draws a uniformly random
//! `u ∈ F^k` subject to `u · c_dealer = secret` and hands participant `j` the
//! share `u · c_j`. A set of participants learns the secret iff the dealer
//! column lies in the span of their columns; otherwise every secret is
//! equally likely given their shares. The access structure is the port of
//! the matroid at the dealer column.

use std::collections::BTreeMap;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::Representation;
use crate::fields::{Element, FieldDesc};
use crate::linalg::{self, LinalgError, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SharingError {
    #[error("dealer column {0} is zero, no scheme exists")]
    ZeroDealerColumn(usize),
    #[error("representation has not been verified")]
    UnverifiedRepresentation,
    #[error("the share holders cannot reconstruct the secret")]
    NotQualified,
    #[error("column {0} is out of range")]
    ColumnOutOfRange(usize),
    #[error("bundle dealer column {found} differs from {expected}")]
    DealerMismatch { expected: usize, found: usize },
    #[error("element or bundle does not belong to the representation's field")]
    FieldMismatch,
    #[error("expected {expected} coefficients, got {got}")]
    CoefficientCount { expected: usize, got: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShareBundle {
    pub dealer_col: usize,
    pub shares: BTreeMap<usize, Element>,
    pub field: FieldDesc,
}

impl ShareBundle {
    /// Keeps only the shares of `holders`.
    pub fn restrict(&self, holders: &[usize]) -> ShareBundle {
        ShareBundle {
            dealer_col: self.dealer_col,
            shares: self.shares.iter().filter(|(c, _)| holders.contains(c)).map(|(c, e)| (*c, e.clone())).collect(),
            field: self.field.clone(),
        }
    }
}

fn check_column(rep: &Representation, col: usize) -> Result<(), SharingError> {
    if col >= rep.params().n() {
        Err(SharingError::ColumnOutOfRange(col))
    } else {
        Ok(())
    }
}

fn dot(field: &FieldDesc, u: &[Element], column: &[Element]) -> Element {
    u.iter().zip(column).fold(field.zero(), |acc, (a, b)| field.add(&acc, &field.mul(a, b)))
}

/// Shares for a fixed coefficient vector `u`; the implied secret is `u · c_dealer`.
pub fn shares_for_coefficients(
    rep: &Representation,
    dealer_col: usize,
    u: &[Element],
) -> Result<(Element, ShareBundle), SharingError> {
    check_column(rep, dealer_col)?;
    let field = rep.field();
    if u.len() != rep.params().k() {
        return Err(SharingError::CoefficientCount { expected: rep.params().k(), got: u.len() });
    }
    if u.iter().any(|e| !field.contains(e)) {
        return Err(SharingError::FieldMismatch);
    }
    let matrix = rep.matrix();
    let secret = dot(field, u, &matrix.column(dealer_col));
    let shares = (0..rep.params().n())
        .filter(|&j| j != dealer_col)
        .map(|j| (j, dot(field, u, &matrix.column(j))))
        .collect();
    Ok((secret, ShareBundle { dealer_col, shares, field: field.clone() }))
}

/// Splits `secret`; refuses representations not marked verified.
pub fn split<R: Rng + ?Sized>(
    rep: &Representation,
    dealer_col: usize,
    secret: &Element,
    rng: &mut R,
) -> Result<ShareBundle, SharingError> {
    if !rep.is_verified() {
        return Err(SharingError::UnverifiedRepresentation);
    }
    split_unverified(rep, dealer_col, secret, rng)
}

pub fn split_unverified<R: Rng + ?Sized>(
    rep: &Representation,
    dealer_col: usize,
    secret: &Element,
    rng: &mut R,
) -> Result<ShareBundle, SharingError> {
    check_column(rep, dealer_col)?;
    let field = rep.field();
    if !field.contains(secret) {
        return Err(SharingError::FieldMismatch);
    }
    let c = rep.matrix().column(dealer_col);
    let pivot = c.iter().position(|e| !e.is_zero()).ok_or(SharingError::ZeroDealerColumn(dealer_col))?;
    // free coordinates uniform, the pivot coordinate solved for
    let mut u: Vec<Element> = (0..c.len()).map(|_| field.random(rng)).collect();
    u[pivot] = field.zero();
    let rest = dot(field, &u, &c);
    u[pivot] = field.div(&field.sub(secret, &rest), &c[pivot]).expect("pivot is nonzero");
    let (implied, bundle) = shares_for_coefficients(rep, dealer_col, &u)?;
    debug_assert_eq!(&implied, secret);
    Ok(bundle)
}

/// Whether the dealer column lies in the span of the `subset` columns.
pub fn is_qualified(rep: &Representation, dealer_col: usize, subset: &[usize]) -> bool {
    let field = rep.field();
    let sub = rep.matrix().select_columns(subset);
    let with_dealer = rep.matrix().select_columns(&[subset, &[dealer_col]].concat());
    linalg::rank(field, &sub) == linalg::rank(field, &with_dealer)
}

/// Solves `Σ λ_j c_j = c_dealer` over the share holders' columns and returns
/// `Σ λ_j share_j`. Any solution gives the same value.
pub fn reconstruct(rep: &Representation, dealer_col: usize, bundle: &ShareBundle) -> Result<Element, SharingError> {
    check_column(rep, dealer_col)?;
    if bundle.dealer_col != dealer_col {
        return Err(SharingError::DealerMismatch { expected: dealer_col, found: bundle.dealer_col });
    }
    let field = rep.field();
    if &bundle.field != field || bundle.shares.values().any(|e| !field.contains(e)) {
        return Err(SharingError::FieldMismatch);
    }
    let holders: Vec<usize> = bundle.shares.keys().copied().collect();
    for &h in &holders {
        check_column(rep, h)?;
    }
    let a: Matrix = rep.matrix().select_columns(&holders);
    let target = rep.matrix().column(dealer_col);
    let lambda = linalg::solve(field, &a, &target)?.ok_or(SharingError::NotQualified)?;
    Ok(holders
        .iter()
        .zip(&lambda)
        .fold(field.zero(), |acc, (h, l)| field.add(&acc, &field.mul(l, &bundle.shares[h]))))
}
