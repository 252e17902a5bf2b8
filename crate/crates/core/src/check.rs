use crate::dimq::{Dimension, Quantity};
use crate::error::{Error, Result};

pub(crate) fn positive(q: Quantity, dims: Dimension, name: &'static str) -> Result<Quantity> {
    let q = q.expect_dims(dims, name)?;
    if q.is_positive() {
        Ok(q)
    } else {
        Err(Error::domain(name, "strictly positive"))
    }
}

pub(crate) fn non_negative(q: Quantity, dims: Dimension, name: &'static str) -> Result<Quantity> {
    let q = q.expect_dims(dims, name)?;
    if q.sign() >= 0 {
        Ok(q)
    } else {
        Err(Error::domain(name, "non-negative"))
    }
}
