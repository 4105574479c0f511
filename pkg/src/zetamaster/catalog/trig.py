# in progress
