'''
  ******************************************************************************************
      Assembly:                Cubo
      Filename:                boogr.py
      Author:                  Terry D. Eppler
      Created:                 05-31-2022

      Last Modified By:        Terry D. Eppler
      Last Modified On:        10-17-2026
  ******************************************************************************************
  <copyright file="boogr.py" company="Terry D. Eppler">

	 Cubo is a computational toolkit for the arithmetic dynamics of cubic polynomials

     Permission is hereby granted, free of charge, to any person obtaining a copy
     of this software and associated documentation files (the “Software”),
     to deal in the Software without restriction,
     including without limitation the rights to use,
     copy, modify, merge, publish, distribute, sublicense,
     and/or sell copies of the Software,
     and to permit persons to whom the Software is furnished to do so,
     subject to the following conditions:

     The above copyright notice and this permission notice shall be included in all
     copies or substantial portions of the Software.

     THE SOFTWARE IS PROVIDED “AS IS”, WITHOUT WARRANTY OF ANY KIND, EXPRESS OR IMPLIED,
     INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
     FITNESS FOR A PARTICULAR PURPOSE AND NON-INFRINGEMENT.
     IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM,
     DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE,
     ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
     DEALINGS IN THE SOFTWARE.

     You can contact me at:  terryeppler@gmail.com or eppler.terry@epa.gov

  </copyright>
  <summary>
    boogr.py
  </summary>
  ******************************************************************************************
  '''
from __future__ import annotations
import sys
import traceback
from sys import exc_info
from typing import List, Optional, TextIO


def throw_if( name: str, value: object ) -> None:
	'''

		Purpose:
		--------
		Guards a public entry point against a missing or empty argument.

		Parameters:
		----------
		name: str - the argument name used in the message
		value: object - the argument value

	'''
	if value is None:
		raise ValueError( f'Argument "{name}" cannot be empty!' )
	if isinstance( value, (str, list, tuple, dict, set) ) and len( value ) == 0:
		raise ValueError( f'Argument "{name}" cannot be empty!' )


class Error( Exception ):
	'''

        Purpose:
        ---------
		Class wrapping error used as the path argument for ErrorDialog class

        Constructor:
		----------
        Error( error: Exception, heading: str=None, cause: str=None,
                method: str=None, module: str=None )

    '''
	exception: Optional[ Exception ]
	heading: Optional[ str ]
	cause: Optional[ str ]
	method: Optional[ str ]
	module: Optional[ str ]
	info: Optional[ str ]

	def __init__( self, error: Exception=None, heading: str=None, cause: str=None,
	              method: str=None, module: str=None ):
		super( ).__init__( heading if heading is not None else str( error ) )
		self.exception = error
		self.heading = heading
		self.cause = cause
		self.method = method
		self.module = module
		self.type = exc_info( )[ 0 ]
		if self.type is not None:
			self.trace = traceback.format_exc( )
			self.info = str( exc_info( )[ 0 ] ) + ': \r\n \r\n' + traceback.format_exc( )
		else:
			self.trace = ''
			self.info = heading if heading is not None else repr( error )


	def __str__( self ) -> str | None:
		'''

            Purpose:
            --------
			returns a string reprentation of the object

            Returns:
            ---------
			str | None

		'''
		if self.heading is not None:
			return self.heading
		return self.info


	def __dir__( self ) -> List[ str ] | None:
		'''

		    Purpose:
		    --------
		    Creates a List[ str ] of type members

		    Returns:
		    ---------
			List[ str ] | None

		'''
		return [ 'exception', 'heading', 'cause', 'method', 'module', 'type', 'trace', 'info' ]


class DomainError( Error ):
	'''

		Purpose:
		--------
		Base of the errors the library raises itself. Carries a heading and the
		location (module, class, method) where the outcome was decided.

	'''

	def __init__( self, heading: str, cause: str=None, method: str=None, module: str=None ):
		super( ).__init__( None, heading, cause, method, module )


class ZeroLinearTerm( DomainError ):
	'''Compositional inverse requested for a series without a linear term.'''


class LeadingRootUnavailable( DomainError ):
	'''The leading coefficient has no k-th root in the exact coefficient field.'''


class OrderMismatch( DomainError ):
	'''The series order differs from the requested root degree.'''


class ExtensionRequired( DomainError ):
	'''Branch coefficients leave Q(omega).'''


class PrecisionExhausted( DomainError ):
	'''A truncated series or p-adic number has no significant digits left.'''


class EscapeOverflow( DomainError ):
	'''

		Purpose:
		--------
		Orbit magnitude crossed the configured bound; signals escape. Carries the
		iteration index and the last finite magnitude.

	'''
	iteration: int
	magnitude: float

	def __init__( self, heading: str, iteration: int=0, magnitude: float=0.0,
	              cause: str=None, method: str=None, module: str=None ):
		super( ).__init__( heading, cause, method, module )
		self.iteration = iteration
		self.magnitude = magnitude


class RootFindingFailure( DomainError ):
	'''Polynomial root iteration did not converge.'''


class Undecided( DomainError ):
	'''Neither outcome could be certified within the cap.'''


class OutOfDomain( DomainError ):
	'''Evaluation point outside the certified convergence domain.'''


class DegreeCapExceeded( DomainError ):
	'''Symbolic degree would exceed the configured cap.'''


class ZeroResultant( DomainError ):
	'''Elimination produced the zero polynomial.'''


class CurveDetected( DomainError ):
	'''

		Purpose:
		--------
		Two relations share a curve component; the component is attached.

	'''

	def __init__( self, heading: str, component: object=None,
	              cause: str=None, method: str=None, module: str=None ):
		super( ).__init__( heading, cause, method, module )
		self.component = component


class ErrorDialog( ):
	'''

	    Construcotr:  ErrorDialog( error )

	    Purpose:  Class that renders an Error as a plain text report on a stream
	    (stderr by default).

    '''
	error: Optional[ Exception ]
	heading: Optional[ str ]
	module: Optional[ str ]
	info: Optional[ str ]
	cause: Optional[ str ]
	method: Optional[ str ]
	stream: Optional[ TextIO ]

	def __init__( self, error: Error, stream: TextIO=None ):
		self.error = error
		self.heading = getattr( error, 'heading', None )
		self.module = getattr( error, 'module', None )
		self.info = getattr( error, 'info', None ) or str( error )
		self.cause = getattr( error, 'cause', None )
		self.method = getattr( error, 'method', None )
		self.stream = stream


	def __str__( self ) -> str | None:
		return self.info


	def __dir__( self ) -> List[ str ] | None:
		'''

		    Purpose:
		    --------
		    Creates a List[ str ] of type members

		    Returns:
		    ---------
			List[ str ] | None

		'''
		return [ 'info', 'cause', 'method', 'error', 'heading', 'module', 'stream', 'show' ]


	def show( self ) -> str:
		'''

            Purpose:
            --------
            Writes the report and returns it.

            Returns:
            ---------
            str

		'''
		_msg = self.heading if isinstance( self.heading, str ) else type( self.error ).__name__
		_info = f'{_msg}\r\nModule:\t{self.module}\r\nClass:\t{self.cause}\r\n' \
		        f'Method:\t{self.method}\r\n \r\n{self.info}\r\n'
		_stream = self.stream if self.stream is not None else sys.stderr
		_stream.write( _info )
		_stream.flush( )
		return _info
