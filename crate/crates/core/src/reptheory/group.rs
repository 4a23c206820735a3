use std::sync::OnceLock;

use super::{character_table, CharacterTable};
use crate::error::{check_degree, Result};
use crate::symgroup::{enumerate_sn, Permutation, MAX_DEGREE};

/// Largest degree for which the full multiplication table is cached.
const MULT_TABLE_MAX: usize = 6;

/// Precomputed data for S_n: elements in lexicographic order, conjugacy class
/// of each element, and the character table.
#[derive(Debug)]
pub struct SymmetricGroup {
    n: usize,
    elements: Vec<Permutation>,
    class_of: Vec<usize>,
    characters: CharacterTable,
    mult: Option<Vec<u16>>,
}

static CACHE: [OnceLock<SymmetricGroup>; MAX_DEGREE + 1] = [const { OnceLock::new() }; MAX_DEGREE + 1];

impl SymmetricGroup {
    /// Shared, lazily built instance for degree `n`.
    pub fn get(n: usize) -> Result<&'static SymmetricGroup> {
        check_degree(n, 1, MAX_DEGREE)?;
        Ok(CACHE[n].get_or_init(|| SymmetricGroup::build(n)))
    }

    fn build(n: usize) -> Self {
        let elements = enumerate_sn(n).expect("degree checked");
        let characters = character_table(n).expect("degree checked");
        let class_of = elements
            .iter()
            .map(|p| characters.index_of(&p.cycle_type()).expect("cycle type is a partition"))
            .collect();
        let mult = (n <= MULT_TABLE_MAX).then(|| {
            let mut table = Vec::with_capacity(elements.len() * elements.len());
            for g in &elements {
                for h in &elements {
                    table.push(g.compose_unchecked(h).lex_rank() as u16);
                }
            }
            table
        });
        SymmetricGroup {
            n,
            elements,
            class_of,
            characters,
            mult,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn characters(&self) -> &CharacterTable {
        &self.characters
    }

    /// Index (into the character table columns) of the class of element `g`.
    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    /// Index of `g ∘ h`.
    #[inline]
    pub fn product(&self, g: usize, h: usize) -> usize {
        match &self.mult {
            Some(t) => t[g * self.elements.len() + h] as usize,
            None => self.elements[g].compose_unchecked(&self.elements[h]).lex_rank(),
        }
    }
}
