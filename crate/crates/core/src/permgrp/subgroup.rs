use std::ops::Deref;
use std::sync::Arc;

use super::group::PermGroup;
use super::perm::Perm;
use crate::{Error, Result};

/// A subgroup together with the group it was taken in; every generator is
/// checked to be a member of the parent.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: Arc<PermGroup>,
    group: Arc<PermGroup>,
}

impl Subgroup {
    pub fn new(parent: Arc<PermGroup>, gens: Vec<Perm>) -> Result<Self> {
        let group = Arc::new(parent.subgroup(gens)?);
        Ok(Self { parent, group })
    }

    /// Wraps an already built group after checking containment.
    pub fn from_group(parent: Arc<PermGroup>, group: Arc<PermGroup>) -> Result<Self> {
        if !group.is_subgroup_of(&parent) {
            return Err(Error::NotSubgroup("generators outside the parent group".into()));
        }
        Ok(Self { parent, group })
    }

    pub fn parent(&self) -> &Arc<PermGroup> {
        &self.parent
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn index(&self) -> u128 {
        self.parent.order() / self.group.order()
    }
}

impl Deref for Subgroup {
    type Target = PermGroup;

    fn deref(&self) -> &PermGroup {
        &self.group
    }
}
