# DO NOT EDIT THIS FILE.
